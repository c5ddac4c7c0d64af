use std::collections::BTreeSet;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::partition::{factorial, Partition};
use crate::error::{Error, Result};

/// Cycle type of a conjugacy class of `S_d`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CycleType(pub Partition);

impl CycleType {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        Ok(CycleType(Partition::new(parts)?))
    }

    /// Cycle type of a permutation given as 0-based images `i ↦ images[i]`.
    pub fn of_permutation(images: &[usize]) -> Self {
        let mut seen = vec![false; images.len()];
        let mut lengths = Vec::new();
        for start in 0..images.len() {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = images[i];
                len += 1;
            }
            lengths.push(len);
        }
        CycleType(Partition::from_unsorted(&lengths))
    }

    pub fn size(&self) -> usize {
        self.0.size()
    }

    /// Number of cycles, counting fixed points.
    pub fn cycles(&self) -> usize {
        self.0.len()
    }

    /// Centralizer order `z_ρ = Π_i i^{m_i} m_i!`.
    pub fn centralizer_order(&self) -> BigUint {
        let mut z = BigUint::one();
        let parts = self.0.parts();
        let mut i = 0;
        while i < parts.len() {
            let len = parts[i];
            let mult = parts[i..].iter().take_while(|&&p| p == len).count();
            z *= BigUint::from(len).pow(mult as u32) * factorial(mult);
            i += mult;
        }
        z
    }

    /// Size of the conjugacy class, `d!/z_ρ`.
    pub fn class_size(&self) -> BigUint {
        factorial(self.size()) / self.centralizer_order()
    }

    /// `(-1)^{d - #cycles}`.
    pub fn sign(&self) -> i32 {
        if (self.size() - self.cycles()).is_multiple_of(2) {
            1
        } else {
            -1
        }
    }
}

/// Irreducible character `χ^λ(ρ)` by the Murnaghan–Nakayama rule.
///
/// Rim hooks are removed through the beta-set of `λ`: a hook of length `r`
/// is a bead `b` with `b - r ≥ 0` free, and its height is the number of beads
/// strictly between `b - r` and `b`.
pub fn sym_character(lambda: &Partition, rho: &CycleType) -> Result<BigInt> {
    if lambda.size() != rho.size() {
        return Err(Error::SizeMismatch(format!(
            "character of {lambda} at a class of S_{}",
            rho.size()
        )));
    }
    let len = lambda.len();
    let beads: BTreeSet<usize> = (0..len).map(|i| lambda.part(i) + (len - 1 - i)).collect();
    Ok(mn(&beads, rho.0.parts()))
}

fn mn(beads: &BTreeSet<usize>, cycles: &[usize]) -> BigInt {
    let Some((&r, rest)) = cycles.split_first() else {
        return BigInt::one();
    };
    let mut total = BigInt::zero();
    for &b in beads {
        if b < r || beads.contains(&(b - r)) {
            continue;
        }
        let height = beads.range(b - r + 1..b).count();
        let mut next = beads.clone();
        next.remove(&b);
        next.insert(b - r);
        let v = mn(&next, rest);
        if height.is_multiple_of(2) {
            total += v;
        } else {
            total -= v;
        }
    }
    total
}

#[cfg(test)]
mod tests {
    use super::super::partition::{dim_sym_irrep, enumerate_partitions};
    use super::*;
    use num_bigint::ToBigInt;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn ct(parts: &[usize]) -> CycleType {
        CycleType::new(parts.to_vec()).unwrap()
    }

    /// χ^{(2,1)} realized as the permutation character of S_3 on Q^3 minus
    /// the trivial character, evaluated on an explicit permutation.
    fn standard_character_brute(images: &[usize]) -> i64 {
        let fixed = images.iter().enumerate().filter(|(i, &j)| *i == j).count() as i64;
        fixed - 1
    }

    #[test]
    fn examples() {
        for l in [ct(&[1, 1, 1]), ct(&[2, 1]), ct(&[3])] {
            assert_eq!(sym_character(&p(&[3]), &l).unwrap(), BigInt::one());
        }
        assert_eq!(
            sym_character(&p(&[2, 1]), &ct(&[1, 1, 1])).unwrap(),
            BigInt::from(2)
        );
        assert_eq!(
            sym_character(&p(&[2, 1]), &ct(&[3])).unwrap(),
            BigInt::from(-1)
        );
        assert_eq!(
            sym_character(&p(&[2, 1]), &ct(&[3])).unwrap(),
            BigInt::from(standard_character_brute(&[1, 2, 0]))
        );
        assert_eq!(
            sym_character(&p(&[2, 1]), &ct(&[2, 1])).unwrap(),
            BigInt::from(standard_character_brute(&[1, 0, 2]))
        );
        assert!(sym_character(&p(&[2, 1]), &ct(&[2])).is_err());
    }

    #[test]
    fn identity_class_is_dimension_and_column_is_sign() {
        for d in 1..=7 {
            for l in enumerate_partitions(d, None) {
                let id = CycleType(Partition::column(d));
                assert_eq!(
                    sym_character(&l, &id).unwrap(),
                    dim_sym_irrep(&l).to_bigint().unwrap()
                );
            }
            for rho in enumerate_partitions(d, None) {
                let rho = CycleType(rho);
                assert_eq!(
                    sym_character(&Partition::column(d), &rho).unwrap(),
                    BigInt::from(rho.sign())
                );
            }
        }
    }

    #[test]
    fn orthogonality() {
        for d in 1..=6 {
            let parts = enumerate_partitions(d, None);
            let order = factorial(d).to_bigint().unwrap();
            for l in &parts {
                for m in &parts {
                    let s: BigInt = parts
                        .iter()
                        .map(|r| {
                            let r = CycleType(r.clone());
                            r.class_size().to_bigint().unwrap()
                                * sym_character(l, &r).unwrap()
                                * sym_character(m, &r).unwrap()
                        })
                        .sum();
                    let expected = if l == m {
                        order.clone()
                    } else {
                        BigInt::zero()
                    };
                    assert_eq!(s, expected, "d={d} λ={l} μ={m}");
                }
            }
        }
    }

    #[test]
    fn class_sizes_sum_to_group_order() {
        for d in 0..=8 {
            let total: BigUint = enumerate_partitions(d, None)
                .into_iter()
                .map(|r| CycleType(r).class_size())
                .sum();
            assert_eq!(total, factorial(d));
        }
    }

    #[test]
    fn cycle_type_of_permutation() {
        assert_eq!(CycleType::of_permutation(&[1, 2, 0, 3]), ct(&[3, 1]));
        assert_eq!(
            CycleType::of_permutation(&[]),
            CycleType(Partition::empty())
        );
    }
}
