//! Fixed inputs for the kernel benchmarks.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use sliceworks::testkit::{random_linear_product, random_polynomial};
use sliceworks::SlicePolynomial;

/// Products of `degree` linear factors; the same list for a given seed.
pub fn linear_products(count: usize, degree: usize, seed: u64) -> Vec<SlicePolynomial> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let lp = random_linear_product(&mut rng, degree, 2.0);
        if lp.roots.len() == degree {
            out.push(lp.poly);
        }
    }
    out
}

pub fn polynomials(count: usize, degree: usize, seed: u64) -> Vec<SlicePolynomial> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| random_polynomial(&mut rng, degree, 4.0)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inputs_are_reproducible() {
        assert_eq!(linear_products(4, 3, 1), linear_products(4, 3, 1));
        assert!(linear_products(4, 3, 1).iter().all(|p| p.degree() == Some(3)));
    }
}
