use num::{BigInt, One, Zero};

use super::BoundsError;

/// Exact binomial coefficient; zero when `k > n`.
pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Layer sizes and counting constants of the layered-degree coloring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CombinatorialConstants {
    pub k: usize,
    pub ell: usize,
    pub m: usize,
    /// `t_j = k - (j - 1)(k - ell)` for `j = 1..=m+1`.
    pub t: Vec<usize>,
    /// `C(k, ell) * sum_{j=1..m} C(ell, t_{j+1})`.
    pub f: BigInt,
    /// `prod_{j=1..m-1} C(t_j, t_{j+1})`.
    pub g: BigInt,
    /// Vertex count of the link path: `ell - 1 + floor(k / (k - ell)) (k - ell)`.
    pub q: usize,
}

impl CombinatorialConstants {
    /// `c0 = 2 k^2 * d` for a size-Ramsey value `d` of the link path.
    pub fn c0(&self, link_size_ramsey: &BigInt) -> BigInt {
        BigInt::from(2 * self.k * self.k) * link_size_ramsey
    }
}

pub fn check_overlap(k: usize, ell: usize) -> Result<(), BoundsError> {
    if k < 2 || ell == 0 || ell >= k {
        return Err(BoundsError::Range(format!("need k >= 2 and 1 <= ell < k, got k={k}, ell={ell}")));
    }
    Ok(())
}

pub fn combinatorial_constants(k: usize, ell: usize, m: usize) -> Result<CombinatorialConstants, BoundsError> {
    check_overlap(k, ell)?;
    let s = k - ell;
    if m == 0 || m > k / s {
        return Err(BoundsError::Range(format!("need 1 <= m <= floor(k/(k-ell)) = {}, got m={m}", k / s)));
    }
    let t: Vec<usize> = (0..=m).map(|j| k - j * s).collect();
    let f = binomial(k, ell) * (1..=m).map(|j| binomial(ell, t[j])).sum::<BigInt>();
    let g = (0..m - 1).map(|j| binomial(t[j], t[j + 1])).product();
    Ok(CombinatorialConstants {
        k,
        ell,
        m,
        t,
        f,
        g,
        q: ell - 1 + (k / s) * s,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let c = combinatorial_constants(3, 2, 3).unwrap();
        assert_eq!((c.t.clone(), c.f.clone(), c.g.clone()), (vec![3, 2, 1, 0], 12.into(), 6.into()));
        let c = combinatorial_constants(4, 2, 2).unwrap();
        assert_eq!((c.t.clone(), c.f.clone(), c.g.clone()), (vec![4, 2, 0], 12.into(), 6.into()));
        let c = combinatorial_constants(2, 1, 1).unwrap();
        assert_eq!((c.t.clone(), c.f.clone(), c.g.clone()), (vec![2, 1], 2.into(), 1.into()));
        assert_eq!(c.q, 2);
        assert!(combinatorial_constants(3, 2, 4).is_err());
        assert!(combinatorial_constants(3, 3, 1).is_err());
    }

    #[test]
    fn q_and_c0() {
        let c = combinatorial_constants(3, 2, 1).unwrap();
        assert_eq!(c.q, 4);
        assert_eq!(c.c0(&7.into()), 126.into());
    }
}
