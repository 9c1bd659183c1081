use std::fmt;

use num::{BigInt, BigRational, Integer};
use serde::{Serialize, Serializer};

use super::constants::{check_overlap, combinatorial_constants};
use super::formulas::{
    afl_ramsey_lower, bierbrauer_r, is_positive, link_size_ramsey_default, majority_ramsey_upper,
    short_path_size_bounds, valid_path_order_at_most,
};
use super::BoundsError;

pub const ASYMPTOTIC_NOTE: &str = "asymptotic, not asserted";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundKind {
    Lower,
    Upper,
    Exact,
    Asymptotic,
}

impl fmt::Display for BoundKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BoundKind::Lower => "lower",
            BoundKind::Upper => "upper",
            BoundKind::Exact => "exact",
            BoundKind::Asymptotic => "asymptotic",
        })
    }
}

/// Formula identifiers. Each names one function of this module.
pub mod formula {
    pub const AFL_PARTITION: &str = "afl-partition";
    pub const MAJORITY_COLOR: &str = "majority-color";
    pub const BIERBRAUER: &str = "bierbrauer-p4";
    pub const P4_TWO_COLORS: &str = "p4-two-color-size";
    pub const STAR_ARBORICITY: &str = "p4-star-arboricity";
    pub const HIERARCHY_LOWER: &str = "short-path-hierarchy-lower";
    pub const SUNFLOWER_UPPER: &str = "short-path-sunflower-upper";
    pub const SUNFLOWER_EXACT: &str = "short-path-sunflower-exact";
    pub const LINK_DEGREE: &str = "link-degree-combinator";
    pub const K3_PRINTED: &str = "k3-tight-printed";
    pub const K3_CHAIN: &str = "k3-tight-chain";
    pub const LOOSE: &str = "loose-component-combinator";
    pub const LINK_FAMILY: &str = "link-family-combinator";
    pub const TIGHT_CYCLES: &str = "tight-cycle-family";
    pub const ASYMPTOTIC: &str = "asymptotic-annotation";
}

fn ser_rational<S: Serializer>(v: &Option<BigRational>, s: S) -> Result<S::Ok, S::Error> {
    match v {
        Some(x) => s.serialize_some(&x.to_string()),
        None => s.serialize_none(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundEntry {
    /// The bounded quantity, e.g. `Rhat_2(P_90^(3,2))`.
    pub name: String,
    pub kind: BoundKind,
    /// Lower bounds marked strict hold with `>`; otherwise `>=` / `<=`.
    pub strict: bool,
    #[serde(serialize_with = "ser_rational")]
    pub value: Option<BigRational>,
    pub formula: &'static str,
    pub source: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub format: u32,
    pub r: usize,
    pub k: usize,
    pub ell: usize,
    pub n: usize,
    pub entries: Vec<BoundEntry>,
    /// Entries dropped because their validity window excludes the parameters.
    pub dropped: Vec<DroppedEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DroppedEntry {
    pub formula: &'static str,
    pub reason: String,
}

impl BoundReport {
    pub fn find(&self, formula: &str) -> Option<&BoundEntry> {
        self.entries.iter().find(|e| e.formula == formula)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// Aligned text table, one row per entry followed by dropped entries.
    pub fn to_table(&self) -> String {
        let rows: Vec<[String; 5]> = self
            .entries
            .iter()
            .map(|e| {
                let rel = match (e.kind, e.strict) {
                    (BoundKind::Lower, true) => ">",
                    (BoundKind::Lower, false) => ">=",
                    (BoundKind::Upper, _) => "<=",
                    (BoundKind::Exact, _) => "=",
                    (BoundKind::Asymptotic, _) => "~",
                };
                let value = e.value.as_ref().map(|v| format!("{rel} {}", show(v))).unwrap_or_else(|| "-".into());
                [
                    e.name.clone(),
                    e.kind.to_string(),
                    value,
                    e.formula.to_string(),
                    e.note.clone().unwrap_or_default(),
                ]
            })
            .collect();
        let header = ["quantity", "kind", "value", "formula", "note"].map(String::from);
        let mut width = [0usize; 5];
        for row in std::iter::once(&header).chain(&rows) {
            for (w, cell) in width.iter_mut().zip(row) {
                *w = (*w).max(cell.chars().count());
            }
        }
        let mut out = format!("bounds for r={} k={} ell={} n={}\n", self.r, self.k, self.ell, self.n);
        for row in std::iter::once(&header).chain(&rows) {
            let line: Vec<String> = row
                .iter()
                .zip(width)
                .map(|(c, w)| format!("{c:<w$}"))
                .collect();
            out.push_str(line.join("  ").trim_end());
            out.push('\n');
        }
        for d in &self.dropped {
            out.push_str(&format!("dropped {}: {}\n", d.formula, d.reason));
        }
        out
    }
}

/// Integers print plainly; fractions also get a three-digit decimal.
fn show(v: &BigRational) -> String {
    if v.is_integer() {
        return v.to_integer().to_string();
    }
    let scaled = (v * BigRational::from_integer(1000.into())).floor().to_integer();
    let (q, rem) = scaled.div_mod_floor(&BigInt::from(1000));
    format!("{v} (~{q}.{rem:03})")
}

/// Values supplied to the combinators in place of the built-in defaults.
#[derive(Clone, Debug, Default)]
pub struct ComposeInputs {
    /// A lower bound (or exact value) for the size-Ramsey number of the link
    /// path `P_q^{(k-1, ell-1)}`.
    pub link_size_ramsey: Option<BigInt>,
    pub family: Option<LinkFamily>,
}

/// Parameters of the generic link-family combinator.
#[derive(Clone, Debug)]
pub struct LinkFamily {
    pub label: String,
    /// Lower bound on the size-Ramsey number of the common link graph `F`.
    pub link_size_ramsey: BigInt,
    /// Lower bound on the Ramsey number of the family.
    pub family_ramsey: BigInt,
}

fn rat(x: impl Into<BigInt>) -> BigRational {
    BigRational::from_integer(x.into())
}

struct Builder {
    entries: Vec<BoundEntry>,
    dropped: Vec<DroppedEntry>,
}

impl Builder {
    #[allow(clippy::too_many_arguments)]
    fn push(&mut self, name: String, kind: BoundKind, strict: bool, value: Option<BigRational>, formula: &'static str, source: &'static str, note: Option<String>) {
        self.entries.push(BoundEntry {
            name,
            kind,
            strict,
            value,
            formula,
            source,
            note,
        });
    }

    fn drop(&mut self, formula: &'static str, reason: String) {
        self.dropped.push(DroppedEntry { formula, reason });
    }
}

/// Every bound that applies to `P_n^{(k,ell)}` with `r` colors.
pub fn composed_lower_bounds(r: usize, k: usize, ell: usize, n: usize, inputs: &ComposeInputs) -> Result<BoundReport, BoundsError> {
    check_overlap(k, ell)?;
    if r < 2 {
        return Err(BoundsError::Range(format!("need r >= 2, got {r}")));
    }
    let afl = afl_ramsey_lower(r, k, ell, n)?;
    let path = format!("P_{n}^({k},{ell})");
    let ramsey = format!("R_{r}({path})");
    let size = format!("Rhat_{r}({path})");
    let mut b = Builder {
        entries: Vec::new(),
        dropped: Vec::new(),
    };

    b.push(ramsey.clone(), BoundKind::Lower, true, Some(rat(afl.clone())), formula::AFL_PARTITION, "Alon-Frankl-Lovasz partition coloring", None);

    let maj = majority_ramsey_upper(r, n, k)?;
    let via = (ell + 1 < k).then(|| format!("through the tight path P_{n}^({k})"));
    let cap_note = (!maj.within_cap()).then(|| format!("exceeds cap r(k+1)n/2 = {}", maj.cap));
    let note = match (via, cap_note) {
        (Some(a), Some(c)) => Some(format!("{a}; {c}")),
        (a, c) => a.or(c),
    };
    b.push(ramsey.clone(), BoundKind::Upper, false, Some(rat(maj.ramsey_upper)), formula::MAJORITY_COLOR, "majority color class against the Turan bound", note.clone());
    b.push(size.clone(), BoundKind::Upper, false, Some(rat(maj.size_upper.clone())), formula::MAJORITY_COLOR, "complete host on the majority order", note);

    if k == 2 && n == 4 {
        b.push(ramsey.clone(), BoundKind::Exact, false, Some(rat(bierbrauer_r(r)?)), formula::BIERBRAUER, "Bierbrauer", None);
        if r == 2 {
            b.push(size.clone(), BoundKind::Exact, false, Some(rat(7)), formula::P4_TWO_COLORS, "known two-color value", None);
        }
    }

    let s = k - ell;
    let m = (n - ell) / s - 1;
    if m >= 1 && m <= k / s {
        let sp = short_path_size_bounds(r, k, ell, m)?;
        b.push(size.clone(), BoundKind::Lower, true, Some(sp.lower.clone()), formula::HIERARCHY_LOWER, "layered-degree coloring with scaled color count", None);
        b.push(size.clone(), BoundKind::Upper, false, Some(rat(sp.upper.clone())), formula::SUNFLOWER_UPPER, "random sunflower-extension host", sp.upper_note.clone());
        if let Some(ex) = sp.exact {
            b.push(size.clone(), BoundKind::Exact, false, Some(rat(ex)), formula::SUNFLOWER_EXACT, "sunflower host on r+1 edges", None);
        }
        if let Some((lo, hi)) = sp.refined {
            b.push(size.clone(), BoundKind::Lower, true, Some(lo), formula::STAR_ARBORICITY, "star-arboricity coloring (Nash-Williams)", None);
            b.push(size.clone(), BoundKind::Upper, false, Some(rat(hi)), formula::STAR_ARBORICITY, "sunflower-extension host", None);
        }
    }

    let (dhat, dhat_src) = match &inputs.link_size_ramsey {
        Some(v) => (v.clone(), "supplied"),
        None => link_size_ramsey_default(r, k, ell)?,
    };
    let consts = combinatorial_constants(k, ell, 1)?;
    let c0 = consts.c0(&dhat);
    let link_note = format!("link size-Ramsey {dhat} ({dhat_src}), q={}, c0={c0}", consts.q);
    match valid_path_order_at_most(k, ell, &(BigInt::from(n) - &c0)) {
        Some(short) if BigInt::from(n) >= c0 => {
            let inner: BigInt = afl_ramsey_lower(r, k, ell, short)? + 1;
            let v = BigRational::new(dhat.clone() * &inner, k.into());
            b.push(
                size.clone(),
                BoundKind::Lower,
                false,
                Some(v),
                formula::LINK_DEGREE,
                "low-degree links colored first, high-degree part by partition coloring",
                Some(format!("{link_note}; inner path P_{short}")),
            );
        }
        _ => b.drop(formula::LINK_DEGREE, format!("needs n >= c0 with a valid path order at n - c0; {link_note}")),
    }

    if k == 3 && ell == 2 {
        let nr = rat(n);
        let printed = if r == 2 {
            BigRational::new(28.into(), 9.into()) * &nr - rat(30)
        } else {
            BigRational::new((r * r * (r + 2)).into(), 12.into()) * &nr - rat(12 * r * r)
        };
        // The chain as printed: (1/k) d ((r-1+k)/k (n - k^2 d) - 2r).
        let kk = rat(k);
        let d = rat(dhat.clone());
        let chain = &d / &kk * (rat(r + k - 1) / &kk * (&nr - &kk * &kk * &d) - rat(2 * r));
        let diff = &printed - &chain;
        let flag = if is_positive(&diff) {
            format!("printed constant exceeds the recomputed chain by {}", show(&diff))
        } else {
            "printed form is below the recomputed chain".to_string()
        };
        b.push(size.clone(), BoundKind::Lower, false, Some(printed), formula::K3_PRINTED, "printed closed form for 3-uniform tight paths", Some(flag));
        let window = if BigInt::from(n) >= c0 {
            String::new()
        } else {
            format!("; n < c0 = {c0}, outside the combinator's window")
        };
        b.push(
            size.clone(),
            BoundKind::Lower,
            false,
            Some(chain),
            formula::K3_CHAIN,
            "intermediate chain recomputed with the link value",
            Some(format!("d={dhat}{window}")),
        );
    }

    let b_colors = (2 * r - 2) / 3;
    let threshold = 12 * r * r * (k - ell) + ell;
    if 2 * ell > k {
        b.drop(formula::LOOSE, format!("needs ell <= k/2, got ell={ell}"));
    } else if n <= threshold {
        b.drop(formula::LOOSE, format!("needs n > 12 r^2 (k-ell) + ell = {threshold}"));
    } else if b_colors == 0 {
        b.drop(formula::LOOSE, format!("floor((2r-2)/3) = 0 colors for r={r}"));
    } else {
        let inner: BigInt = afl_ramsey_lower(b_colors, k, ell, n)? + 1;
        let v = BigRational::new(BigInt::from(r) * inner.clone(), (k * k).into());
        b.push(
            size.clone(),
            BoundKind::Lower,
            false,
            Some(v),
            formula::LOOSE,
            "edge-adjacency graph with bounded monochromatic components",
            Some(format!("R_{b_colors} >= {inner}")),
        );
    }

    if let Some(fam) = &inputs.family {
        let v = BigRational::new(fam.link_size_ramsey.clone() * &fam.family_ramsey, k.into());
        b.push(format!("Rhat_{r}({})", fam.label), BoundKind::Lower, false, Some(v), formula::LINK_FAMILY, "common link graph in every member", None);
    }

    let (dt, dt_src) = link_size_ramsey_default(r, k, k - 1)?;
    let cyc_inner: BigInt = afl_ramsey_lower(r, k, k - 1, 2 * k - 1)? + 1;
    b.push(
        format!("Rhat_{r}(C^({k})_>={})", 2 * k - 1),
        BoundKind::Lower,
        false,
        Some(BigRational::new(dt.clone() * &cyc_inner, k.into())),
        formula::TIGHT_CYCLES,
        "common link graph P_(2k-2)^(k-1) in every tight cycle",
        Some(format!("link size-Ramsey {dt} ({dt_src}), R_{r}(P_{}^({k})) >= {cyc_inner}", 2 * k - 1)),
    );

    let asym: &[(&str, &'static str)] = &[
        ("Rhat_r(P_n^(k,l)) = Omega_k(r^floor(k/(k-l)) n)", "link-degree combinator with the short-path lower bound"),
        ("R_r(P_n^(k,l)) <= (1+o(1)) r n", "known Ramsey upper bound"),
        ("R_r(P_n^(k)) >= (1-o(1)) r (n-k) for infinitely many r", "resolvable design coloring"),
        ("Rhat_r(C^(k)_>=2k-1) = Omega_k(r^k) for infinitely many r", "tight-cycle link family"),
    ];
    for &(name, source) in asym {
        b.push(name.to_string(), BoundKind::Asymptotic, false, None, formula::ASYMPTOTIC, source, Some(ASYMPTOTIC_NOTE.into()));
    }
    if k == 2 {
        b.push(
            "Omega(r^2 n) <= Rhat_r(P_n) <= O(r^2 log r n)".into(),
            BoundKind::Asymptotic,
            false,
            None,
            formula::ASYMPTOTIC,
            "known graph path bounds",
            Some(ASYMPTOTIC_NOTE.into()),
        );
    }

    Ok(BoundReport {
        format: crate::FORMAT_VERSION,
        r,
        k,
        ell,
        n,
        entries: b.entries,
        dropped: b.dropped,
    })
}
