//! Arithmetic in `Z_n` and discovery of the prime-order fields embedded in it.
//!
//! A proper subset of `Z_n` can be a field under the induced operations even
//! though `Z_n` itself is not. Such a subfield has its own multiplicative
//! identity `e`, an idempotent that is usually different from `1`. For example
//! `{0, 2, 4}` inside `Z_6` is a copy of `Z_3` whose identity is `4`.
//!
//! Every additive subgroup of `Z_n` is `dZ_n` for a divisor `d`, and `dZ_n` is
//! a field exactly when `q = n/d` is prime and `gcd(d, q) = 1`. That closed form
//! drives [`find_subfields`]; [`subfield_oracle`] re-derives the same list by
//! certifying every candidate from scratch.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RingError {
    #[error("modulus must be at least 2, got {0}")]
    ModulusTooSmall(u64),
    #[error("oracle search is limited to n <= {limit}, got {n}")]
    OracleLimit { n: u64, limit: u64 },
    #[error("{0}")]
    Rejected(#[from] Rejection),
    #[error("subfield record is inconsistent: {0}")]
    InconsistentRecord(String),
    #[error("{0} is not prime")]
    NotPrime(u64),
}

impl RingError {
    pub fn code(&self) -> &'static str {
        match self {
            RingError::ModulusTooSmall(_) => "invalid_modulus",
            RingError::OracleLimit { .. } => "oracle_limit",
            RingError::Rejected(r) => r.code(),
            RingError::InconsistentRecord(_) => "inconsistent_record",
            RingError::NotPrime(_) => "not_prime",
        }
    }
}

/// Why a residue set failed to certify as a subfield.
#[derive(Debug, Error, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "reason", rename_all = "snake_case")]
pub enum Rejection {
    #[error("element set is empty")]
    Empty,
    #[error("{element} is not a residue mod {n}")]
    OutOfRange { element: u64, n: u64 },
    #[error("the whole ring is not a proper subset")]
    NotProper,
    #[error("not multiplicatively closed: {a}*{b} = {product} is outside the set")]
    NotMultiplicativelyClosed { a: u64, b: u64, product: u64 },
    #[error("not additively closed: {a}+{b} = {sum} is outside the set")]
    NotAdditivelyClosed { a: u64, b: u64, sum: u64 },
    #[error("no nonzero element acts as a multiplicative identity")]
    NoIdentity,
    #[error("{element} has no inverse inside the set")]
    NonInvertible { element: u64 },
}

impl Rejection {
    pub fn code(&self) -> &'static str {
        match self {
            Rejection::Empty => "empty",
            Rejection::OutOfRange { .. } => "out_of_range",
            Rejection::NotProper => "not_proper",
            Rejection::NotMultiplicativelyClosed { .. } => "not_multiplicatively_closed",
            Rejection::NotAdditivelyClosed { .. } => "not_additively_closed",
            Rejection::NoIdentity => "no_identity",
            Rejection::NonInvertible { .. } => "non_invertible",
        }
    }
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Divisors of `n` in ascending order.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

pub fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Inverse of `a` modulo `m`, if `gcd(a, m) = 1`.
pub fn inv_mod(a: u64, m: u64) -> Option<u64> {
    let (mut old_r, mut r) = (a as i128 % m as i128, m as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let quot = old_r / r;
        (old_r, r) = (r, old_r - quot * r);
        (old_s, s) = (s, old_s - quot * s);
    }
    if old_r != 1 {
        return None;
    }
    Some(old_s.rem_euclid(m as i128) as u64)
}

/// The ring of integers modulo `n`, `n >= 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct ModulusRing {
    n: u64,
}

impl ModulusRing {
    pub fn new(n: u64) -> Result<Self, RingError> {
        if n < 2 {
            return Err(RingError::ModulusTooSmall(n));
        }
        Ok(ModulusRing { n })
    }

    pub fn modulus(&self) -> u64 {
        self.n
    }

    pub fn reduce(&self, a: i64) -> u64 {
        a.rem_euclid(self.n as i64) as u64
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        (a + b) % self.n
    }

    pub fn sub(&self, a: u64, b: u64) -> u64 {
        (a + self.n - b % self.n) % self.n
    }

    pub fn neg(&self, a: u64) -> u64 {
        (self.n - a % self.n) % self.n
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        mul_mod(a, b, self.n)
    }

    pub fn pow(&self, a: u64, e: u64) -> u64 {
        pow_mod(a, e, self.n)
    }

    pub fn is_field(&self) -> bool {
        is_prime(self.n)
    }

    /// All `e` with `e^2 = e (mod n)`, ascending.
    pub fn idempotents(&self) -> Vec<u64> {
        (0..self.n).filter(|&e| self.mul(e, e) == e).collect()
    }
}

impl fmt::Display for ModulusRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Z_{}", self.n)
    }
}

/// A prime-order field sitting inside `Z_n` as a proper subset.
///
/// The isomorphism with `Z_q` sends the identity to `1` and extends
/// additively, so `k * identity (mod n)` corresponds to `k (mod q)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "SubfieldRecord", into = "SubfieldRecord")]
pub struct Subfield {
    n: u64,
    elements: Vec<u64>,
    identity: u64,
    from_prime: Vec<u64>,
    to_prime: BTreeMap<u64, u64>,
}

/// Wire form of a [`Subfield`].
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SubfieldRecord {
    pub n: u64,
    pub elements: Vec<u64>,
    pub identity: u64,
    pub prime_order: u64,
}

impl From<Subfield> for SubfieldRecord {
    fn from(k: Subfield) -> Self {
        SubfieldRecord {
            n: k.n,
            prime_order: k.prime_order(),
            identity: k.identity,
            elements: k.elements,
        }
    }
}

impl TryFrom<SubfieldRecord> for Subfield {
    type Error = RingError;

    fn try_from(rec: SubfieldRecord) -> Result<Self, Self::Error> {
        let ring = ModulusRing::new(rec.n)?;
        let k = scalar_field(&ring, &rec.elements)?;
        if k.identity != rec.identity {
            return Err(RingError::InconsistentRecord(format!(
                "identity is {}, record says {}",
                k.identity, rec.identity
            )));
        }
        if k.prime_order() != rec.prime_order {
            return Err(RingError::InconsistentRecord(format!(
                "order is {}, record says {}",
                k.prime_order(),
                rec.prime_order
            )));
        }
        Ok(k)
    }
}

impl Subfield {
    /// Builds the field generated additively by `identity`. Callers guarantee
    /// that `identity` is the identity of a prime-order field inside `Z_n`.
    fn from_identity(n: u64, identity: u64, q: u64) -> Self {
        let from_prime: Vec<u64> = (0..q).map(|k| mul_mod(k, identity, n)).collect();
        let to_prime = from_prime
            .iter()
            .enumerate()
            .map(|(k, &a)| (a, k as u64))
            .collect();
        let mut elements = from_prime.clone();
        elements.sort_unstable();
        Subfield {
            n,
            elements,
            identity,
            from_prime,
            to_prime,
        }
    }

    pub fn modulus(&self) -> u64 {
        self.n
    }

    pub fn ring(&self) -> ModulusRing {
        ModulusRing { n: self.n }
    }

    pub fn elements(&self) -> &[u64] {
        &self.elements
    }

    pub fn identity(&self) -> u64 {
        self.identity
    }

    pub fn prime_order(&self) -> u64 {
        self.from_prime.len() as u64
    }

    pub fn contains(&self, a: u64) -> bool {
        self.to_prime.contains_key(&a)
    }

    pub fn to_prime(&self, a: u64) -> Option<u64> {
        self.to_prime.get(&a).copied()
    }

    /// Image of `k (mod q)` inside the subfield.
    pub fn from_prime(&self, k: u64) -> u64 {
        self.from_prime[(k % self.prime_order()) as usize]
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        (a + b) % self.n
    }

    pub fn sub(&self, a: u64, b: u64) -> u64 {
        (a + self.n - b) % self.n
    }

    pub fn neg(&self, a: u64) -> u64 {
        (self.n - a) % self.n
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        mul_mod(a, b, self.n)
    }

    /// Inverse relative to the subfield identity.
    pub fn inv(&self, a: u64) -> Option<u64> {
        let q = self.prime_order();
        let k = self.to_prime(a)?;
        inv_mod(k, q).map(|i| self.from_prime(i))
    }
}

impl fmt::Display for Subfield {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.elements.iter().map(u64::to_string).collect();
        write!(
            f,
            "{{{}}} in Z_{} (e = {}, ~ Z_{})",
            parts.join(", "),
            self.n,
            self.identity,
            self.prime_order()
        )
    }
}

/// All proper subsets of `Z_n` that are fields, sorted by identity.
pub fn find_subfields(ring: &ModulusRing) -> Vec<Subfield> {
    let n = ring.modulus();
    let mut out: Vec<Subfield> = divisors(n)
        .into_iter()
        .filter(|&d| d > 1)
        .filter_map(|d| {
            let q = n / d;
            if !is_prime(q) || gcd(d, q) != 1 {
                return None;
            }
            // e = 0 (mod d), e = 1 (mod q)
            let e = mul_mod(d, inv_mod(d % q, q)?, n);
            Some(Subfield::from_identity(n, e, q))
        })
        .collect();
    out.sort_by_key(Subfield::identity);
    out
}

/// Checks a residue set against the field axioms under arithmetic mod `n`.
pub fn certify_subfield(ring: &ModulusRing, elements: &[u64]) -> Result<Subfield, Rejection> {
    let n = ring.modulus();
    if elements.is_empty() {
        return Err(Rejection::Empty);
    }
    if let Some(&element) = elements.iter().find(|&&a| a >= n) {
        return Err(Rejection::OutOfRange { element, n });
    }
    let mut set = elements.to_vec();
    set.sort_unstable();
    set.dedup();
    if set.len() as u64 == n {
        return Err(Rejection::NotProper);
    }
    let member = |a: u64| set.binary_search(&a).is_ok();

    for &a in &set {
        for &b in &set {
            let product = ring.mul(a, b);
            if !member(product) {
                return Err(Rejection::NotMultiplicativelyClosed { a, b, product });
            }
        }
    }
    for &a in &set {
        for &b in &set {
            let sum = ring.add(a, b);
            if !member(sum) {
                return Err(Rejection::NotAdditivelyClosed { a, b, sum });
            }
        }
    }
    let identity = set
        .iter()
        .copied()
        .find(|&e| e != 0 && set.iter().all(|&a| ring.mul(e, a) == a))
        .ok_or(Rejection::NoIdentity)?;
    for &a in set.iter().filter(|&&a| a != 0) {
        if !set.iter().any(|&b| ring.mul(a, b) == identity) {
            return Err(Rejection::NonInvertible { element: a });
        }
    }
    // A finite additive subgroup of Z_n is cyclic, so a field on it has prime order.
    let q = set.len() as u64;
    debug_assert!(is_prime(q));
    Ok(Subfield::from_identity(n, identity, q))
}

/// `Z_p` as a field over itself. Not a proper subfield, so discovery never
/// reports it; linear algebra accepts it as a scalar field.
pub fn prime_field(ring: &ModulusRing) -> Result<Subfield, RingError> {
    let p = ring.modulus();
    if !is_prime(p) {
        return Err(RingError::NotPrime(p));
    }
    Ok(Subfield::from_identity(p, 1, p))
}

/// Scalar field named by its element list: the whole of `Z_p` for prime `p`,
/// otherwise a certified proper subfield.
pub fn scalar_field(ring: &ModulusRing, elements: &[u64]) -> Result<Subfield, RingError> {
    let n = ring.modulus();
    let mut set = elements.to_vec();
    set.sort_unstable();
    set.dedup();
    if is_prime(n) && set.len() as u64 == n && set.iter().all(|&a| a < n) {
        return prime_field(ring);
    }
    Ok(certify_subfield(ring, elements)?)
}

pub const ORACLE_LIMIT: u64 = 64;

/// Independent route to the subfield list: certify `dZ_n` for every divisor `d`.
pub fn subfield_oracle(ring: &ModulusRing) -> Result<Vec<Subfield>, RingError> {
    let n = ring.modulus();
    if n > ORACLE_LIMIT {
        return Err(RingError::OracleLimit {
            n,
            limit: ORACLE_LIMIT,
        });
    }
    let mut out: Vec<Subfield> = divisors(n)
        .into_iter()
        .filter_map(|d| {
            let candidate: Vec<u64> = (0..n).step_by(d as usize).collect();
            certify_subfield(ring, &candidate).ok()
        })
        .collect();
    out.sort_by_key(Subfield::identity);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring(n: u64) -> ModulusRing {
        ModulusRing::new(n).unwrap()
    }

    fn element_sets(ks: &[Subfield]) -> Vec<Vec<u64>> {
        ks.iter().map(|k| k.elements().to_vec()).collect()
    }

    #[test]
    fn rejects_tiny_modulus() {
        assert_eq!(ModulusRing::new(1), Err(RingError::ModulusTooSmall(1)));
        assert!(ModulusRing::new(0).is_err());
    }

    #[test]
    fn idempotents_small() {
        assert_eq!(ring(6).idempotents(), vec![0, 1, 3, 4]);
        assert_eq!(ring(7).idempotents(), vec![0, 1]);
        assert_eq!(ring(12).idempotents(), vec![0, 1, 4, 9]);
    }

    #[test]
    fn subfields_of_z6() {
        let ks = find_subfields(&ring(6));
        assert_eq!(element_sets(&ks), vec![vec![0, 3], vec![0, 2, 4]]);
        assert_eq!(ks[0].identity(), 3);
        assert_eq!(ks[1].identity(), 4);
        assert_eq!(ks[1].prime_order(), 3);
    }

    #[test]
    fn subfields_of_z12_z15_and_primes() {
        let ks = find_subfields(&ring(12));
        assert_eq!(element_sets(&ks), vec![vec![0, 4, 8]]);
        assert_eq!(ks[0].identity(), 4);

        let ks = find_subfields(&ring(15));
        assert_eq!(element_sets(&ks), vec![vec![0, 3, 6, 9, 12], vec![0, 5, 10]]);
        assert_eq!(ks[0].identity(), 6);
        assert_eq!(ks[1].identity(), 10);

        assert!(find_subfields(&ring(7)).is_empty());
        assert!(find_subfields(&ring(2)).is_empty());
    }

    #[test]
    fn certify_examples() {
        let k = certify_subfield(&ring(6), &[0, 2, 4]).unwrap();
        assert_eq!(k.identity(), 4);
        assert_eq!(k.to_prime(0), Some(0));
        assert_eq!(k.to_prime(4), Some(1));
        assert_eq!(k.to_prime(2), Some(2));

        assert_eq!(
            certify_subfield(&ring(6), &[0, 2]),
            Err(Rejection::NotMultiplicativelyClosed {
                a: 2,
                b: 2,
                product: 4
            })
        );
        let k = certify_subfield(&ring(6), &[0, 3]).unwrap();
        assert_eq!((k.identity(), k.prime_order()), (3, 2));
    }

    #[test]
    fn certify_rejections() {
        let z6 = ring(6);
        assert_eq!(certify_subfield(&z6, &[]), Err(Rejection::Empty));
        assert_eq!(certify_subfield(&z6, &[0]), Err(Rejection::NoIdentity));
        assert_eq!(
            certify_subfield(&z6, &[0, 1, 2, 3, 4, 5]),
            Err(Rejection::NotProper)
        );
        assert_eq!(
            certify_subfield(&z6, &[0, 9]),
            Err(Rejection::OutOfRange { element: 9, n: 6 })
        );
        // {0,4} in Z_8: 4*4 = 0 stays inside, but 4 has no identity to invert to.
        assert_eq!(certify_subfield(&ring(8), &[0, 4]), Err(Rejection::NoIdentity));
        // {0,1,3,4} in Z_6 multiplies closed but 1+1 = 2 escapes.
        assert!(matches!(
            certify_subfield(&z6, &[0, 1, 3, 4]),
            Err(Rejection::NotAdditivelyClosed { .. })
        ));
    }

    #[test]
    fn oracle_examples() {
        let ks = subfield_oracle(&ring(18)).unwrap();
        assert!(ks.iter().any(|k| k.elements() == [0, 9] && k.identity() == 9));
        assert!(subfield_oracle(&ring(4)).unwrap().is_empty());
        let orders: Vec<u64> = subfield_oracle(&ring(30))
            .unwrap()
            .iter()
            .map(Subfield::prime_order)
            .collect();
        let mut sorted = orders.clone();
        sorted.sort_unstable();
        assert_eq!(sorted, vec![2, 3, 5]);
        assert_eq!(
            subfield_oracle(&ring(65)),
            Err(RingError::OracleLimit { n: 65, limit: 64 })
        );
    }

    #[test]
    fn inverse_inside_subfield() {
        let k = find_subfields(&ring(15)).remove(0);
        for &a in k.elements().iter().filter(|&&a| a != 0) {
            let b = k.inv(a).unwrap();
            assert_eq!(k.mul(a, b), k.identity());
        }
        assert_eq!(k.inv(0), None);
    }

    #[test]
    fn json_round_trip_and_shape() {
        let k = certify_subfield(&ring(6), &[0, 2, 4]).unwrap();
        let json = serde_json::to_string(&k).unwrap();
        assert_eq!(json, r#"{"n":6,"elements":[0,2,4],"identity":4,"prime_order":3}"#);
        let back: Subfield = serde_json::from_str(&json).unwrap();
        assert_eq!(back, k);
        let bad = r#"{"n":6,"elements":[0,2,4],"identity":2,"prime_order":3}"#;
        assert!(serde_json::from_str::<Subfield>(bad).is_err());
    }

    #[test]
    fn whole_prime_field() {
        let f5 = prime_field(&ring(5)).unwrap();
        assert_eq!((f5.identity(), f5.prime_order()), (1, 5));
        assert_eq!(f5.elements(), &[0, 1, 2, 3, 4]);
        assert_eq!(prime_field(&ring(6)), Err(RingError::NotPrime(6)));
        assert_eq!(scalar_field(&ring(5), &[0, 1, 2, 3, 4]).unwrap(), f5);
        assert_eq!(scalar_field(&ring(6), &[0, 3]).unwrap().identity(), 3);
        assert!(scalar_field(&ring(6), &[0, 1, 2, 3, 4, 5]).is_err());
        assert!(find_subfields(&ring(5)).is_empty());
    }

    #[test]
    fn helpers() {
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(divisors(49), vec![1, 7, 49]);
        assert_eq!(inv_mod(3, 7), Some(5));
        assert_eq!(inv_mod(2, 6), None);
        assert_eq!(pow_mod(2, 10, 1000), 24);
    }
}
