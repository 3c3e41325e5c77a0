//! Independent combinatorial ground truth. Nothing here touches the series or
//! lambda code paths.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::motive::{half_power, MotiveClass};

/// Partition stored by multiplicities: `part size -> count`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    multiplicities: BTreeMap<usize, usize>,
}

impl Partition {
    pub fn from_multiplicities<I: IntoIterator<Item = (usize, usize)>>(pairs: I) -> Self {
        let multiplicities = pairs
            .into_iter()
            .filter(|&(i, a)| i > 0 && a > 0)
            .fold(BTreeMap::new(), |mut m, (i, a)| {
                *m.entry(i).or_insert(0) += a;
                m
            });
        Partition { multiplicities }
    }

    pub fn from_parts(parts: &[usize]) -> Self {
        Self::from_multiplicities(parts.iter().map(|&p| (p, 1)))
    }

    pub fn multiplicities(&self) -> &BTreeMap<usize, usize> {
        &self.multiplicities
    }

    /// Parts in ascending order.
    pub fn parts(&self) -> Vec<usize> {
        self.multiplicities
            .iter()
            .flat_map(|(&i, &a)| std::iter::repeat_n(i, a))
            .collect()
    }

    /// `|alpha| = sum i alpha_i`.
    pub fn size(&self) -> usize {
        self.multiplicities.iter().map(|(i, a)| i * a).sum()
    }

    /// `l(alpha) = sum alpha_i`.
    pub fn length(&self) -> usize {
        self.multiplicities.values().sum()
    }

    /// `|G_alpha| = prod alpha_i!`.
    pub fn automorphism_order(&self) -> BigInt {
        self.multiplicities
            .values()
            .map(|&a| (1..=a).map(BigInt::from).product::<BigInt>())
            .product()
    }
}

impl std::str::FromStr for Partition {
    type Err = Error;

    /// Accepts comma separated parts, e.g. `"2,1,1"`.
    fn from_str(s: &str) -> Result<Self> {
        let parts = s
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<usize>()
                    .ok()
                    .filter(|&v| v > 0)
                    .ok_or_else(|| Error::InvalidArgument(format!("bad partition part {p:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Partition::from_parts(&parts))
    }
}

/// All partitions of `n`, each once.
pub fn partitions(n: usize) -> Vec<Partition> {
    fn rec(n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(Partition::from_parts(cur));
            return;
        }
        for p in (1..=max.min(n)).rev() {
            cur.push(p);
            rec(n - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// Largest argument accepted by [`plane_partitions_count`].
pub const PLANE_PARTITION_LIMIT: usize = 12;

/// Number of plane partitions of `n` by enumeration of weakly decreasing arrays.
pub fn plane_partitions_count(n: usize) -> Result<u64> {
    if n > PLANE_PARTITION_LIMIT {
        return Err(Error::InvalidArgument(format!(
            "brute-force plane partition count supports n <= {PLANE_PARTITION_LIMIT}, got {n}"
        )));
    }
    if n == 0 {
        return Ok(1);
    }
    let top = vec![n; n];
    // shard on the corner entry
    Ok((1..=n)
        .into_par_iter()
        .map(|corner| {
            let mut row = vec![corner];
            extend_row(&top, &mut row, n - corner)
        })
        .sum())
}

/// Count arrays whose next row starts with `row`, bounded entrywise by `prev`.
fn extend_row(prev: &[usize], row: &mut Vec<usize>, budget: usize) -> u64 {
    // close the row here and stack further rows beneath it
    let mut total = stack_rows(row, budget);
    let c = row.len();
    if c < prev.len() {
        let bound = prev[c].min(row[c - 1]).min(budget);
        for v in 1..=bound {
            row.push(v);
            total += extend_row(prev, row, budget - v);
            row.pop();
        }
    }
    total
}

fn stack_rows(prev: &[usize], budget: usize) -> u64 {
    if budget == 0 {
        return 1;
    }
    let bound = prev[0].min(budget);
    (1..=bound)
        .map(|v| {
            let mut row = vec![v];
            extend_row(prev, &mut row, budget - v)
        })
        .sum()
}

/// MacMahon coefficients through `n * M_n = sum_{k=1}^n sigma_2(k) M_{n-k}`.
pub fn macmahon_by_recurrence(order: usize) -> Vec<BigInt> {
    let sigma2: Vec<BigInt> = (0..=order)
        .map(|k| {
            if k == 0 {
                BigInt::zero()
            } else {
                (1..=k).filter(|d| k % d == 0).map(|d| BigInt::from(d * d)).sum()
            }
        })
        .collect();
    let mut m = vec![BigInt::one()];
    for n in 1..=order {
        let s: BigInt = (1..=n).map(|k| &sigma2[k] * &m[n - k]).sum();
        m.push(s / BigInt::from(n));
    }
    m
}

fn int_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let n = a.len().min(b.len());
    let mut out = vec![BigInt::zero(); n];
    for i in 0..n {
        for j in 0..n - i {
            out[i + j] += &a[i] * &b[j];
        }
    }
    out
}

fn int_inverse(a: &[BigInt]) -> Vec<BigInt> {
    assert!(a[0].is_one(), "constant term must be 1");
    let mut out = vec![BigInt::zero(); a.len()];
    out[0] = BigInt::one();
    for k in 1..a.len() {
        let s: BigInt = (1..=k).map(|j| &a[j] * &out[k - j]).sum();
        out[k] = -s;
    }
    out
}

fn int_pow(a: &[BigInt], e: i64) -> Vec<BigInt> {
    let base = if e < 0 { int_inverse(a) } else { a.to_vec() };
    let mut acc = vec![BigInt::zero(); a.len()];
    acc[0] = BigInt::one();
    for _ in 0..e.unsigned_abs() {
        acc = int_mul(&acc, &base);
    }
    acc
}

/// Coefficients of `M(-t)^chi_y (1 + t)^(-chi_c)` through `t^order`.
pub fn euler_wallcross_series(chi_y: i64, chi_c: i64, order: usize) -> Vec<BigInt> {
    let m_neg: Vec<BigInt> = macmahon_by_recurrence(order)
        .into_iter()
        .enumerate()
        .map(|(i, c)| if i % 2 == 1 { -c } else { c })
        .collect();
    let mut one_plus_t = vec![BigInt::zero(); order + 1];
    one_plus_t[0] = BigInt::one();
    if order >= 1 {
        one_plus_t[1] = BigInt::one();
    }
    int_mul(&int_pow(&m_neg, chi_y), &int_pow(&one_plus_t, -chi_c))
}

/// `[F(A^d, k)] = prod_{i<k} (L^d - i)`, ordered configurations of `k` distinct points.
pub fn config_space_class(dim: u32, k: usize) -> Result<MotiveClass> {
    if !(1..=3).contains(&dim) {
        return Err(Error::InvalidArgument(format!("dimension must be 1, 2 or 3, got {dim}")));
    }
    let ld = half_power(2 * dim as i64);
    Ok((0..k)
        .map(|i| &ld - &MotiveClass::from(i as i64))
        .product())
}

/// Virtual Euler characteristic `(-1)^dim chi` of a smooth scheme.
pub fn virtual_chi_smooth(dim: u32, chi: i64) -> i64 {
    if dim.is_multiple_of(2) {
        chi
    } else {
        -chi
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (0..10).map(|n| partitions(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30]);
        assert_eq!(partitions(0), vec![Partition::default()]);
    }

    #[test]
    fn partitions_are_distinct_and_sized() {
        for n in 0..12 {
            let ps = partitions(n);
            let set: std::collections::BTreeSet<_> = ps.iter().cloned().collect();
            assert_eq!(set.len(), ps.len());
            assert!(ps.iter().all(|p| p.size() == n));
        }
    }

    #[test]
    fn euler_pentagonal_recurrence() {
        let p: Vec<i64> = (0..25).map(|n| partitions(n).len() as i64).collect();
        for n in 1..25i64 {
            let mut s = 0i64;
            for k in 1.. {
                let g1 = k * (3 * k - 1) / 2;
                if g1 > n {
                    break;
                }
                let sign = if k % 2 == 1 { 1 } else { -1 };
                s += sign * p[(n - g1) as usize];
                let g2 = k * (3 * k + 1) / 2;
                if g2 <= n {
                    s += sign * p[(n - g2) as usize];
                }
            }
            assert_eq!(s, p[n as usize], "n = {n}");
        }
    }

    #[test]
    fn total_length_matches_divisor_sum_recurrence() {
        // sum over alpha |- n of l(alpha) = sum_{k=1}^n d(k) p(n - k)
        let p: Vec<usize> = (0..16).map(|n| partitions(n).len()).collect();
        for n in 1..16 {
            let lhs: usize = partitions(n).iter().map(Partition::length).sum();
            let rhs: usize = (1..=n)
                .map(|k| (1..=k).filter(|d| k % d == 0).count() * p[n - k])
                .sum();
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn partition_statistics() {
        let a = Partition::from_multiplicities([(1, 2), (2, 1)]);
        assert_eq!(a.size(), 4);
        assert_eq!(a.length(), 3);
        assert_eq!(a.automorphism_order(), BigInt::from(2));
        assert_eq!(a.parts(), vec![1, 1, 2]);
        assert_eq!("2,1,1".parse::<Partition>().unwrap(), a);
        assert!("2,0".parse::<Partition>().is_err());
    }

    #[test]
    fn plane_partitions() {
        let want = [1u64, 1, 3, 6, 13, 24, 48, 86, 160, 282, 500];
        for (n, w) in want.iter().enumerate() {
            assert_eq!(plane_partitions_count(n).unwrap(), *w, "n = {n}");
        }
        assert!(plane_partitions_count(13).is_err());
    }

    #[test]
    fn recurrence_agrees_with_brute_force() {
        let m = macmahon_by_recurrence(10);
        for (n, c) in m.iter().enumerate() {
            assert_eq!(*c, BigInt::from(plane_partitions_count(n).unwrap()));
        }
    }

    #[test]
    fn wallcross_series_examples() {
        assert_eq!(euler_wallcross_series(3, 2, 1)[1], BigInt::from(-5));
        assert_eq!(euler_wallcross_series(2, 2, 1)[1], BigInt::from(-4));
        let unit = euler_wallcross_series(0, 0, 5);
        assert_eq!(unit[0], BigInt::one());
        assert!(unit[1..].iter().all(Zero::is_zero));
    }

    #[test]
    fn configuration_spaces() {
        assert_eq!(config_space_class(1, 2).unwrap(), MotiveClass::poly_in_l(&[0, -1, 1]));
        assert_eq!(config_space_class(2, 0).unwrap(), MotiveClass::one());
        assert_eq!(config_space_class(3, 2).unwrap(), MotiveClass::poly_in_l(&[0, 0, 0, -1, 0, 0, 1]));
        assert!(config_space_class(4, 1).is_err());
    }

    #[test]
    fn virtual_chi() {
        assert_eq!(virtual_chi_smooth(3, 2), -2);
        assert_eq!(virtual_chi_smooth(0, 7), 7);
        for g in 0..4 {
            assert_eq!(virtual_chi_smooth(1, 2 - 2 * g), 2 * g - 2);
        }
    }
}
