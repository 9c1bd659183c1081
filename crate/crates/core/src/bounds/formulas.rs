use num::{BigInt, BigRational, Integer, One, Signed, ToPrimitive, Zero};

use super::constants::{binomial, check_overlap, combinatorial_constants};
use super::BoundsError;

/// Rational upper approximation of e, accurate to 1e-9.
pub fn e_upper() -> BigRational {
    BigRational::new(2_718_281_829u64.into(), 1_000_000_000u64.into())
}

fn rat(x: impl Into<BigInt>) -> BigRational {
    BigRational::from_integer(x.into())
}

pub fn ceil_int(x: &BigRational) -> BigInt {
    x.ceil().to_integer()
}

fn check_path(k: usize, ell: usize, n: usize) -> Result<usize, BoundsError> {
    check_overlap(k, ell)?;
    if n < k || !(n - ell).is_multiple_of(k - ell) {
        return Err(BoundsError::Range(format!(
            "n={n} is not a ({k},{ell})-path order: need n >= k and (n - ell) divisible by {}",
            k - ell
        )));
    }
    Ok((n - ell) / (k - ell))
}

/// `m' = ceil(m / ceil(k / (k - ell)))`: the matching number of the path.
pub fn path_matching_number(k: usize, ell: usize, n: usize) -> Result<usize, BoundsError> {
    let m = check_path(k, ell, n)?;
    Ok(m.div_ceil(k.div_ceil(k - ell)))
}

/// Order of the partition coloring host: `(r - 1)(m' - 1) + n - 1`.
pub fn afl_order(r: usize, k: usize, ell: usize, n: usize) -> Result<usize, BoundsError> {
    if r == 0 {
        return Err(BoundsError::Range("r must be positive".into()));
    }
    let mp = path_matching_number(k, ell, n)?;
    Ok((r - 1) * (mp - 1) + n - 1)
}

/// `(r - 1) m' + n - r`; the Ramsey number is strictly larger.
pub fn afl_ramsey_lower(r: usize, k: usize, ell: usize, n: usize) -> Result<BigInt, BoundsError> {
    afl_order(r, k, ell, n).map(BigInt::from)
}

/// The linear form `(1 + (r-1)/((k-ell) ceil(k/(k-ell)))) n - 2r + 1`.
pub fn afl_ramsey_lower_linear(r: usize, k: usize, ell: usize, n: usize) -> Result<BigRational, BoundsError> {
    check_path(k, ell, n)?;
    let s = k - ell;
    let slope = rat(1) + BigRational::new((r as i64 - 1).into(), (s * k.div_ceil(s)).into());
    Ok(slope * rat(n) - rat(2 * r as i64) + rat(1))
}

/// Upper bound on the Turán number of the tight path `P_n^{(k)}` in `N` vertices.
pub fn turan_upper_paths(big_n: usize, n: usize, k: usize) -> Result<BigRational, BoundsError> {
    if k < 2 || n < k || big_n < n {
        return Err(BoundsError::Range(format!("need N >= n >= k >= 2, got N={big_n}, n={n}, k={k}")));
    }
    let base = rat(binomial(big_n, k - 1));
    let coeff = if k.is_multiple_of(2) {
        BigRational::new((n - k).into(), 2.into())
    } else {
        BigRational::new((n - k + 1 + (n - k) / k).into(), 2.into())
    };
    Ok(coeff * base)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MajorityBound {
    /// Least `M >= n` with `C(M, k) / r` above the Turán bound: `R_r <= M`.
    pub ramsey_upper: usize,
    /// `C(M, k)`, an upper bound on the size-Ramsey number.
    pub size_upper: BigInt,
    /// `r (k + 1) n / 2`.
    pub cap: BigRational,
}

impl MajorityBound {
    pub fn within_cap(&self) -> bool {
        rat(self.ramsey_upper) <= self.cap
    }
}

/// Majority-color upper bounds on the Ramsey and size-Ramsey numbers of
/// the tight path `P_n^{(k)}`.
pub fn majority_ramsey_upper(r: usize, n: usize, k: usize) -> Result<MajorityBound, BoundsError> {
    if r < 1 || k < 2 || n < k {
        return Err(BoundsError::Range(format!("need r >= 1 and n >= k >= 2, got r={r}, n={n}, k={k}")));
    }
    let mut m = n;
    loop {
        let lhs = BigRational::new(binomial(m, k), r.into());
        if lhs > turan_upper_paths(m, n, k)? {
            break;
        }
        m += 1;
    }
    Ok(MajorityBound {
        ramsey_upper: m,
        size_upper: binomial(m, k),
        cap: BigRational::new((r * (k + 1) * n).into(), 2.into()),
    })
}

/// `R_r(P_4)` for graphs.
pub fn bierbrauer_r(r: usize) -> Result<usize, BoundsError> {
    match r {
        0 | 1 => Err(BoundsError::Range(format!("need r >= 2, got {r}"))),
        3 => Ok(6),
        _ if r % 3 == 1 => Ok(2 * r + 2),
        _ => Ok(2 * r + 1),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShortPathBounds {
    /// The size-Ramsey number is strictly above this.
    pub lower: BigRational,
    pub upper: BigInt,
    pub exact: Option<BigInt>,
    /// For the graph `P_4`: `(r^2/2, (r+1)(2r+1)]`.
    pub refined: Option<(BigRational, BigInt)>,
    /// Set when `m = k/(k-ell)`, where the upper bound is only established
    /// for smaller `m`.
    pub upper_note: Option<String>,
}

/// Bounds on the size-Ramsey number of the `(m+1)`-edge path
/// `P^{(k,ell)}_{ell + (m+1)(k-ell)}`.
pub fn short_path_size_bounds(r: usize, k: usize, ell: usize, m: usize) -> Result<ShortPathBounds, BoundsError> {
    if r < 2 {
        return Err(BoundsError::Range(format!("need r >= 2, got {r}")));
    }
    let c = combinatorial_constants(k, ell, m)?;
    let scaled = BigInt::from(r - 1).div_floor(&(BigInt::from(2) * &c.f));
    let lower = BigRational::new(num::pow(scaled, m), c.g.clone());
    let upper = ceil_int(&num::pow(e_upper() * rat(m + 1) * rat(r), m));
    let exact = (m == 1).then(|| BigInt::from(r + 1));
    let refined = (k == 2 && ell == 1 && m == 2).then(|| {
        (
            BigRational::new((r * r).into(), 2.into()),
            BigInt::from((r + 1) * (2 * r + 1)),
        )
    });
    let upper_note = (m * (k - ell) == k).then(|| format!("m = k/(k-ell) = {m}: sunflower bound stated for smaller m"));
    Ok(ShortPathBounds {
        lower,
        upper,
        exact,
        refined,
        upper_note,
    })
}

/// A lower bound on the size-Ramsey number of the link path
/// `P_q^{(k-1, ell-1)}`, with a description of where it comes from.
pub fn link_size_ramsey_default(r: usize, k: usize, ell: usize) -> Result<(BigInt, &'static str), BoundsError> {
    check_overlap(k, ell)?;
    let s = k - ell;
    let edges = k / s;
    let (kp, lp) = (k - 1, ell - 1);
    Ok(match edges {
        1 => (BigInt::one(), "single edge"),
        2 => (BigInt::from(r + 1), "two-edge path: r+1 (sunflower)"),
        3 if kp == 2 && lp == 1 && r == 2 => (BigInt::from(7), "graph P4, exact two-color value 7"),
        3 if kp == 2 && lp == 1 => (
            BigRational::new((r * r).into(), 2.into()).floor().to_integer() + 1,
            "graph P4: above r^2/2 (star-arboricity)",
        ),
        _ => {
            let b = short_path_size_bounds(r.max(2), kp, lp, edges - 1)?;
            (b.lower.floor().to_integer() + 1, "layered-degree coloring lower bound")
        }
    })
}

/// Largest path order `<= x` that is valid for `(k, ell)`, if any.
pub fn valid_path_order_at_most(k: usize, ell: usize, x: &BigInt) -> Option<usize> {
    let x = x.to_usize()?;
    if x < k {
        return None;
    }
    Some(x - (x - ell) % (k - ell))
}

pub(crate) fn is_positive(x: &BigRational) -> bool {
    x.is_positive() && !x.is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn afl_examples() {
        assert_eq!(afl_ramsey_lower(2, 2, 1, 4).unwrap(), 4.into());
        assert_eq!(afl_ramsey_lower(3, 3, 2, 5).unwrap(), 4.into());
        for n in [6, 9] {
            // for k - ell dividing k the partition bound equals the linear form plus r - 1 - ...
            let exact = rat(afl_ramsey_lower(2, 3, 2, n).unwrap());
            let linear = BigRational::new((4 * n as i64).into(), 3.into()) - rat(3);
            assert!(exact >= linear);
        }
        assert!(afl_ramsey_lower(2, 4, 2, 7).is_err());
    }

    #[test]
    fn turan_examples() {
        assert_eq!(turan_upper_paths(10, 4, 2).unwrap(), rat(10));
        assert_eq!(turan_upper_paths(10, 6, 3).unwrap(), BigRational::new(225.into(), 2.into()));
        assert!(turan_upper_paths(10, 4, 4).unwrap().is_zero());
    }

    #[test]
    fn majority_examples() {
        let b = majority_ramsey_upper(2, 4, 2).unwrap();
        assert_eq!((b.ramsey_upper, b.size_upper.clone()), (6, 15.into()));
        let b = majority_ramsey_upper(2, 6, 3).unwrap();
        assert_eq!((b.ramsey_upper, b.size_upper.clone()), (18, 816.into()));
        for r in 2..=5 {
            for n in 2..=5 {
                for k in 2..=n {
                    assert!(majority_ramsey_upper(r, n, k).unwrap().within_cap());
                }
            }
        }
    }

    #[test]
    fn bierbrauer() {
        assert_eq!(bierbrauer_r(2).unwrap(), 5);
        assert_eq!(bierbrauer_r(3).unwrap(), 6);
        assert_eq!(bierbrauer_r(4).unwrap(), 10);
        assert!(bierbrauer_r(1).is_err());
    }

    #[test]
    fn short_paths() {
        let b = short_path_size_bounds(2, 3, 2, 1).unwrap();
        assert_eq!(b.exact, Some(3.into()));
        let b = short_path_size_bounds(5, 2, 1, 1).unwrap();
        assert_eq!((b.lower.clone(), b.upper.clone(), b.exact.clone()), (rat(1), 28.into(), Some(6.into())));
        let b = short_path_size_bounds(2, 2, 1, 2).unwrap();
        assert_eq!(b.refined, Some((rat(2), 15.into())));
    }
}
