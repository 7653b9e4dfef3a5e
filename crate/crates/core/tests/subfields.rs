use smaralg_core::ring::{find_subfields, gcd, is_prime, subfield_oracle, ModulusRing, ORACLE_LIMIT};

/// `dZ_n` is a field exactly when `q = n/d` is prime and coprime to `d`.
fn closed_form(n: u64) -> Vec<Vec<u64>> {
    let mut out: Vec<(u64, Vec<u64>)> = (2..n)
        .filter(|d| n.is_multiple_of(*d))
        .filter(|&d| is_prime(n / d) && gcd(d, n / d) == 1)
        .map(|d| {
            let q = n / d;
            let inv = (1..q).find(|&t| d * t % q == 1).unwrap();
            (d * inv % n, (0..q).map(|t| t * d).collect())
        })
        .collect();
    out.sort();
    out.into_iter().map(|(_, els)| els).collect()
}

#[test]
fn matches_closed_form_up_to_200() {
    for n in 2..=200 {
        let found: Vec<Vec<u64>> = find_subfields(&ModulusRing::new(n).unwrap())
            .iter()
            .map(|k| k.elements().to_vec())
            .collect();
        assert_eq!(found, closed_form(n), "n = {n}");
    }
}

#[test]
fn matches_subset_oracle() {
    for n in 2..=ORACLE_LIMIT {
        let ring = ModulusRing::new(n).unwrap();
        assert_eq!(find_subfields(&ring), subfield_oracle(&ring).unwrap(), "n = {n}");
    }
}

#[test]
fn identities_are_idempotent() {
    for n in 2..=200 {
        let ring = ModulusRing::new(n).unwrap();
        for k in find_subfields(&ring) {
            let e = k.identity();
            assert_eq!(ring.mul(e, e), e);
            assert!(k.elements().iter().all(|&a| ring.mul(e, a) == a));
        }
    }
}
