//! Reproducible corpora of random monomial ideals used by the oracle and
//! property suites.

use crate::arith::rat_int;
use crate::germ::Germ;
use crate::ideal::Ideal;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Default seed of the frozen test corpus.
pub const CORPUS_SEED: u64 = 20260814;

/// Deterministic corpus of monomial ideals with finite colength: each has a
/// pure power of exponent 1..=6 on every axis, plus up to three extra
/// monomials with coordinates up to 6, in 2 or 3 variables.
pub fn random_monomial_ideals(seed: u64, count: usize) -> Vec<Ideal> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    for _ in 0..count {
        let n = rng.gen_range(2..=3usize);
        let mut exponents: Vec<Vec<i64>> = Vec::new();
        for axis in 0..n {
            let mut pure = vec![0i64; n];
            pure[axis] = rng.gen_range(1..=6);
            exponents.push(pure);
        }
        let extras = rng.gen_range(0..=3usize);
        for _ in 0..extras {
            loop {
                let k: Vec<i64> = (0..n).map(|_| rng.gen_range(0..=6)).collect();
                if k.iter().any(|&e| e > 0) {
                    exponents.push(k);
                    break;
                }
            }
        }
        let gens = exponents
            .into_iter()
            .map(|k| Germ::monomial(n, k, rat_int(1), None).expect("valid corpus exponent"))
            .collect();
        out.push(Ideal::new(gens).expect("corpus ideals are well-formed"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_is_deterministic_and_well_formed() {
        let a = random_monomial_ideals(CORPUS_SEED, 10);
        let b = random_monomial_ideals(CORPUS_SEED, 10);
        assert_eq!(a.len(), 10);
        for (x, y) in a.iter().zip(&b) {
            assert!(x.is_monomial());
            assert_eq!(
                x.newton_polyhedron().unwrap(),
                y.newton_polyhedron().unwrap()
            );
            assert!(x.finite_colength_test(1).unwrap());
        }
        let c = random_monomial_ideals(CORPUS_SEED + 1, 10);
        let same = a
            .iter()
            .zip(&c)
            .all(|(x, y)| x.newton_polyhedron().unwrap() == y.newton_polyhedron().unwrap());
        assert!(!same);
    }
}
