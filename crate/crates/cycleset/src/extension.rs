//! Extensions of linear cycle sets.
//!
//! An extension of a linear cycle set `H` by an ideal `I` is described, after
//! choosing a set-theoretic section, by four tables:
//!
//! * `beta: H×H → I` — the 2-cocycle twisting the additive structure,
//! * `f: H×H → I` — the multiplicative cocycle,
//! * `diamond: H×I → I` — the action `h◆y`,
//! * `yleft: I×H → I` — the action `y⊲h`.
//!
//! [`build_product_extension`] assembles the product structure on `I×H` with
//!
//! * sum `(y,h) + (y',h') = (y + y' + beta(h,h'), h + h')`, and
//! * dot `(y,h)·(y',h') = ((h◆y)·(h◆y') + (h◆y)·f(h,h') + (h◆y)⊲(h·h'), h·h')`.
//!
//! Construction is total; validity is a separate concern. [`check_general`]
//! verifies the pointwise condition ledger that is equivalent to the built
//! product being a linear cycle set with morphism injection/projection;
//! [`check_central_cocycle`] verifies the simplified ledger available when
//! the cocycle values act centrally, and [`check_trivial_ideal`] the further
//! reformulation for trivial `I`. [`extract_data`] recovers the tables from
//! an abstract extension and a section, [`extensions_equivalent`] decides
//! equivalence, and [`classify_extensions`] enumerates equivalence classes.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::lcs::{
    additive_automorphisms, additive_endomorphisms, center, lcs_from_table,
    lcs_from_table_trusted, lcs_to_brace, AddGroup, LcsError, LinearCycleSet, TableError,
};
use crate::report::{CheckOutcome, Report};

/// The `[h][y] = y` action table (every `h` acts as the identity).
pub fn trivial_diamond(ni: usize, nh: usize) -> Vec<Vec<usize>> {
    vec![(0..ni).collect(); nh]
}

/// The `[y][h] = 0` action table.
pub fn zero_yleft(ni: usize, nh: usize) -> Vec<Vec<usize>> {
    vec![vec![0; nh]; ni]
}

/// The all-zero `H×H → I` table (used for both `beta` and `f`).
pub fn zero_pairing(nh: usize) -> Vec<Vec<usize>> {
    vec![vec![0; nh]; nh]
}

/// Errors from [`ExtensionData`] construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DataError {
    /// A table has the wrong dimensions or an out-of-range entry.
    Shape,
    /// A construction invariant failed (first failing identity).
    Invariant(CheckOutcome),
}

impl fmt::Display for DataError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DataError::Shape => write!(f, "extension data table has a wrong shape or entry"),
            DataError::Invariant(o) => write!(f, "extension data invariant violated: {o}"),
        }
    }
}

/// The table quadruple `(beta, f, diamond, yleft)` describing a candidate
/// extension of `H` by `I`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtensionData {
    ideal: LinearCycleSet,
    quotient: LinearCycleSet,
    beta: Vec<Vec<usize>>,    // [h][h'] -> I
    f: Vec<Vec<usize>>,       // [h][h'] -> I
    diamond: Vec<Vec<usize>>, // [h][y] -> I
    yleft: Vec<Vec<usize>>,   // [y][h] -> I
}

impl ExtensionData {
    /// Builds the data with shape checks only; invariants are not verified.
    /// Use [`ExtensionData::new`] for validated construction.
    pub fn from_tables(
        ideal: LinearCycleSet,
        quotient: LinearCycleSet,
        beta: Vec<Vec<usize>>,
        f: Vec<Vec<usize>>,
        diamond: Vec<Vec<usize>>,
        yleft: Vec<Vec<usize>>,
    ) -> Result<ExtensionData, DataError> {
        let (ni, nh) = (ideal.size(), quotient.size());
        let shape = |t: &Vec<Vec<usize>>, rows: usize, cols: usize| {
            t.len() == rows && t.iter().all(|r| r.len() == cols && r.iter().all(|&v| v < ni))
        };
        if !shape(&beta, nh, nh) || !shape(&f, nh, nh) || !shape(&diamond, nh, ni) || !shape(&yleft, ni, nh)
        {
            return Err(DataError::Shape);
        }
        Ok(ExtensionData { ideal, quotient, beta, f, diamond, yleft })
    }

    /// Builds the data and verifies the construction invariants: `beta` is a
    /// normalized symmetric 2-cocycle, `f` is normalized, `◆` is additive
    /// with `0◆y = y`, and `⊲` is normalized (`y⊲0 = 0⊲h = 0`).
    pub fn new(
        ideal: LinearCycleSet,
        quotient: LinearCycleSet,
        beta: Vec<Vec<usize>>,
        f: Vec<Vec<usize>>,
        diamond: Vec<Vec<usize>>,
        yleft: Vec<Vec<usize>>,
    ) -> Result<ExtensionData, DataError> {
        let data = ExtensionData::from_tables(ideal, quotient, beta, f, diamond, yleft)?;
        let basics = data.validate_basic();
        match basics.first_failure() {
            None => Ok(data),
            Some(o) => Err(DataError::Invariant(o.clone())),
        }
    }

    pub fn ideal(&self) -> &LinearCycleSet {
        &self.ideal
    }

    pub fn quotient(&self) -> &LinearCycleSet {
        &self.quotient
    }

    pub fn beta(&self, h: usize, h2: usize) -> usize {
        self.beta[h][h2]
    }

    pub fn f_at(&self, h: usize, h2: usize) -> usize {
        self.f[h][h2]
    }

    /// `h ◆ y`.
    pub fn diamond(&self, h: usize, y: usize) -> usize {
        self.diamond[h][y]
    }

    /// `y ⊲ h`.
    pub fn yleft_act(&self, y: usize, h: usize) -> usize {
        self.yleft[y][h]
    }

    pub fn beta_table(&self) -> &Vec<Vec<usize>> {
        &self.beta
    }

    pub fn f_table(&self) -> &Vec<Vec<usize>> {
        &self.f
    }

    pub fn diamond_table(&self) -> &Vec<Vec<usize>> {
        &self.diamond
    }

    pub fn yleft_table(&self) -> &Vec<Vec<usize>> {
        &self.yleft
    }

    /// `y + y' + beta(h,h')`, the twisted sum of ideal parts.
    pub fn y_beta(&self, y: usize, y2: usize, h: usize, h2: usize) -> usize {
        let g = self.ideal.group();
        g.add(g.add(y, y2), self.beta[h][h2])
    }

    /// `(h◆y)·(h◆y') + (h◆y)·f(h,h') + (h◆y)⊲(h·h')`, the ideal part of
    /// the product `(y,h)·(y',h')`.
    pub fn y_f(&self, y: usize, y2: usize, h: usize, h2: usize) -> usize {
        let g = self.ideal.group();
        let hy = self.diamond[h][y];
        g.add(
            g.add(self.ideal.dot(hy, self.diamond[h][y2]), self.ideal.dot(hy, self.f[h][h2])),
            self.yleft[hy][self.quotient.dot(h, h2)],
        )
    }

    /// `y ◁ h := h ◆ (y − y⊲h)`.
    pub fn triangle(&self, y: usize, h: usize) -> usize {
        self.diamond[h][self.ideal.group().sub(y, self.yleft[y][h])]
    }

    /// Checks the construction invariants, reporting each by name.
    pub fn validate_basic(&self) -> Report {
        let (ni, nh) = (self.ideal.size(), self.quotient.size());
        let ig = self.ideal.group();
        let qg = self.quotient.group();
        let mut report = Report::default();

        let mut w = None;
        'a: for h in 0..nh {
            for h2 in 0..nh {
                for h3 in 0..nh {
                    let lhs = ig.add(self.beta[h][h2], self.beta[qg.add(h, h2)][h3]);
                    let rhs = ig.add(self.beta[h2][h3], self.beta[h][qg.add(h2, h3)]);
                    if lhs != rhs {
                        w = Some(vec![h, h2, h3]);
                        break 'a;
                    }
                }
            }
        }
        report.push(CheckOutcome { identity: "beta_cocycle", witness: w });

        let mut w = None;
        'a: for h in 0..nh {
            if self.beta[h][0] != 0 || self.beta[0][h] != 0 {
                w = Some(vec![h, 0]);
                break;
            }
            for h2 in 0..nh {
                if self.beta[h][h2] != self.beta[h2][h] {
                    w = Some(vec![h, h2]);
                    break 'a;
                }
            }
        }
        report.push(CheckOutcome { identity: "beta_normalized_symmetric", witness: w });

        let w = (0..nh).find(|&h| self.f[h][0] != 0 || self.f[0][h] != 0).map(|h| vec![h]);
        report.push(CheckOutcome { identity: "f_normalized", witness: w });

        let mut w = None;
        'a: for h in 0..nh {
            for y in 0..ni {
                for y2 in 0..ni {
                    if self.diamond[h][ig.add(y, y2)] != ig.add(self.diamond[h][y], self.diamond[h][y2]) {
                        w = Some(vec![h, y, y2]);
                        break 'a;
                    }
                }
            }
        }
        report.push(CheckOutcome { identity: "diamond_additive", witness: w });

        let w = (0..ni).find(|&y| self.diamond[0][y] != y).map(|y| vec![y]);
        report.push(CheckOutcome { identity: "diamond_unit", witness: w });

        let mut w = (0..ni).find(|&y| self.yleft[y][0] != 0).map(|y| vec![y, 0]);
        if w.is_none() {
            w = (0..nh).find(|&h| self.yleft[0][h] != 0).map(|h| vec![0, h]);
        }
        report.push(CheckOutcome { identity: "yleft_normalized", witness: w });

        report
    }
}

fn diamond_bijective_witness(data: &ExtensionData) -> Option<Vec<usize>> {
    let ni = data.ideal.size();
    (0..data.quotient.size())
        .find(|&h| {
            let mut seen = vec![false; ni];
            !data.diamond[h].iter().all(|&v| !core::mem::replace(&mut seen[v], true))
        })
        .map(|h| vec![h])
}

/// `h◆beta(h',h'') + f(h,h'+h'') = f(h,h') + f(h,h'') + beta(h·h',h·h'')`.
fn sum_compat_f_witness(data: &ExtensionData) -> Option<Vec<usize>> {
    let nh = data.quotient.size();
    let ig = data.ideal.group();
    let qg = data.quotient.group();
    for h in 0..nh {
        for h2 in 0..nh {
            for h3 in 0..nh {
                let lhs = ig.add(data.diamond[h][data.beta[h2][h3]], data.f[h][qg.add(h2, h3)]);
                let rhs = ig.add(
                    ig.add(data.f[h][h2], data.f[h][h3]),
                    data.beta[data.quotient.dot(h, h2)][data.quotient.dot(h, h3)],
                );
                if lhs != rhs {
                    return Some(vec![h, h2, h3]);
                }
            }
        }
    }
    None
}

/// `y⊲(h'+h'') = y⊲h' + y⊲h'' + beta(h',h'') − y·beta(h',h'')`.
fn sum_compat_yleft_witness(data: &ExtensionData) -> Option<Vec<usize>> {
    let (ni, nh) = (data.ideal.size(), data.quotient.size());
    let ig = data.ideal.group();
    let qg = data.quotient.group();
    for y in 0..ni {
        for h2 in 0..nh {
            for h3 in 0..nh {
                let b = data.beta[h2][h3];
                let lhs = data.yleft[y][qg.add(h2, h3)];
                let rhs = ig.add(
                    ig.add(data.yleft[y][h2], data.yleft[y][h3]),
                    ig.sub(b, data.ideal.dot(y, b)),
                );
                if lhs != rhs {
                    return Some(vec![y, h2, h3]);
                }
            }
        }
    }
    None
}

/// `((h+h')◆y^beta)·((h+h')◆y'') = ((h·h')◆y^f)·((h·h')◆((h◆y)·(h◆y'')))`.
fn dot_compat_ideal_witness(data: &ExtensionData) -> Option<Vec<usize>> {
    let (ni, nh) = (data.ideal.size(), data.quotient.size());
    let qg = data.quotient.group();
    for y in 0..ni {
        for y2 in 0..ni {
            for h in 0..nh {
                for h2 in 0..nh {
                    let hph = qg.add(h, h2);
                    let hdh = data.quotient.dot(h, h2);
                    let yb = data.y_beta(y, y2, h, h2);
                    let yf = data.y_f(y, y2, h, h2);
                    for y3 in 0..ni {
                        let lhs = data.ideal.dot(data.diamond[hph][yb], data.diamond[hph][y3]);
                        let inner = data.ideal.dot(data.diamond[h][y], data.diamond[h][y3]);
                        let rhs = data.ideal.dot(data.diamond[hdh][yf], data.diamond[hdh][inner]);
                        if lhs != rhs {
                            return Some(vec![y, y2, y3, h, h2]);
                        }
                    }
                }
            }
        }
    }
    None
}

/// The quotient-side sum compatibility coupling `beta`, `f` and `⊲`.
fn dot_compat_quotient_witness(data: &ExtensionData) -> Option<Vec<usize>> {
    let (ni, nh) = (data.ideal.size(), data.quotient.size());
    let ig = data.ideal.group();
    let qg = data.quotient.group();
    for y in 0..ni {
        for y2 in 0..ni {
            for h in 0..nh {
                for h2 in 0..nh {
                    let hph = qg.add(h, h2);
                    let hdh = data.quotient.dot(h, h2);
                    let yb = data.diamond[hph][data.y_beta(y, y2, h, h2)];
                    let yf = data.diamond[hdh][data.y_f(y, y2, h, h2)];
                    for h3 in 0..nh {
                        let lhs = ig.add(
                            data.ideal.dot(yb, data.f[hph][h3]),
                            data.yleft[yb][data.quotient.dot(hph, h3)],
                        );
                        let yf2 = data.diamond[hdh][data.y_f(y, 0, h, h3)];
                        let hdh3 = data.quotient.dot(h, h3);
                        let rhs = ig.add(
                            data.ideal.dot(yf, ig.add(yf2, data.f[hdh][hdh3])),
                            data.yleft[yf][data.quotient.dot(hdh, hdh3)],
                        );
                        if lhs != rhs {
                            return Some(vec![y, y2, h, h2, h3]);
                        }
                    }
                }
            }
        }
    }
    None
}

/// Full condition ledger for arbitrary ideals: construction invariants,
/// bijectivity of every `y ↦ h◆y`, and the four compatibility identities
/// that together are equivalent to the built product being a valid
/// extension.
pub fn check_general(data: &ExtensionData) -> Report {
    let mut report = data.validate_basic();
    report.push(CheckOutcome {
        identity: "diamond_bijective",
        witness: diamond_bijective_witness(data),
    });
    report.push(CheckOutcome { identity: "sum_compat_f", witness: sum_compat_f_witness(data) });
    report.push(CheckOutcome {
        identity: "sum_compat_yleft",
        witness: sum_compat_yleft_witness(data),
    });
    report.push(CheckOutcome {
        identity: "dot_compat_ideal",
        witness: dot_compat_ideal_witness(data),
    });
    report.push(CheckOutcome {
        identity: "dot_compat_quotient",
        witness: dot_compat_quotient_witness(data),
    });
    report
}

/// `(h◆y)⊲(h·h') = h◆(y⊲h') + (h◆(y⊲h))⊲(h·h')` — the exchange law
/// between the two actions (central-cocycle ledger).
pub fn yleft_diamond_exchange_witness(data: &ExtensionData) -> Option<Vec<usize>> {
    let (ni, nh) = (data.ideal.size(), data.quotient.size());
    let ig = data.ideal.group();
    for y in 0..ni {
        for h in 0..nh {
            for h2 in 0..nh {
                let hdh = data.quotient.dot(h, h2);
                let lhs = data.yleft[data.diamond[h][y]][hdh];
                let rhs = ig.add(
                    data.diamond[h][data.yleft[y][h2]],
                    data.yleft[data.diamond[h][data.yleft[y][h]]][hdh],
                );
                if lhs != rhs {
                    return Some(vec![y, h, h2]);
                }
            }
        }
    }
    None
}

/// `y◁(hh') = (y◁h)◁h'` with `hh'` the brace product of the quotient —
/// the triangle-action reformulation of the exchange law.
pub fn triangle_assoc_witness(data: &ExtensionData) -> Option<Vec<usize>> {
    let (ni, nh) = (data.ideal.size(), data.quotient.size());
    let qb = lcs_to_brace(&data.quotient);
    for y in 0..ni {
        for h in 0..nh {
            for h2 in 0..nh {
                if data.triangle(y, qb.mul(h, h2)) != data.triangle(data.triangle(y, h), h2) {
                    return Some(vec![y, h, h2]);
                }
            }
        }
    }
    None
}

/// Simplified condition ledger under the central-cocycle hypothesis
/// (`h◆(y⊲h')`, `h◆beta(h',h'')` and `h◆f(h',h'')` all central in `I`).
/// Errors with a witness when the hypothesis itself fails.
pub fn check_central_cocycle(data: &ExtensionData) -> Result<Report, CheckOutcome> {
    let (ni, nh) = (data.ideal.size(), data.quotient.size());
    let ig = data.ideal.group();
    let qg = data.quotient.group();
    let mut central = vec![false; ni];
    for y in center(&data.ideal) {
        central[y] = true;
    }
    for h in 0..nh {
        for y in 0..ni {
            for h2 in 0..nh {
                if !central[data.diamond[h][data.yleft[y][h2]]] {
                    return Err(CheckOutcome::fail("central_hypothesis", vec![h, y, h2]));
                }
            }
        }
        for h2 in 0..nh {
            for h3 in 0..nh {
                if !central[data.diamond[h][data.beta[h2][h3]]]
                    || !central[data.diamond[h][data.f[h2][h3]]]
                {
                    return Err(CheckOutcome::fail("central_hypothesis", vec![h, h2, h3]));
                }
            }
        }
    }

    let mut report = data.validate_basic();
    report.push(CheckOutcome {
        identity: "diamond_bijective",
        witness: diamond_bijective_witness(data),
    });
    report.push(CheckOutcome { identity: "sum_compat_f", witness: sum_compat_f_witness(data) });

    // y⊲(h'+h'') = y⊲h' + y⊲h''.
    let mut w = None;
    'a: for y in 0..ni {
        for h2 in 0..nh {
            for h3 in 0..nh {
                if data.yleft[y][qg.add(h2, h3)] != ig.add(data.yleft[y][h2], data.yleft[y][h3]) {
                    w = Some(vec![y, h2, h3]);
                    break 'a;
                }
            }
        }
    }
    report.push(CheckOutcome { identity: "yleft_additive_h", witness: w });

    // (h◆y)·(h◆y') = h◆(y·y').
    let mut w = None;
    'a: for h in 0..nh {
        for y in 0..ni {
            for y2 in 0..ni {
                if data.ideal.dot(data.diamond[h][y], data.diamond[h][y2])
                    != data.diamond[h][data.ideal.dot(y, y2)]
                {
                    w = Some(vec![h, y, y2]);
                    break 'a;
                }
            }
        }
    }
    report.push(CheckOutcome { identity: "diamond_mult", witness: w });

    // (h+h')◆y = (h·h')◆(h◆y).
    let mut w = None;
    'a: for h in 0..nh {
        for h2 in 0..nh {
            for y in 0..ni {
                if data.diamond[qg.add(h, h2)][y]
                    != data.diamond[data.quotient.dot(h, h2)][data.diamond[h][y]]
                {
                    w = Some(vec![h, h2, y]);
                    break 'a;
                }
            }
        }
    }
    report.push(CheckOutcome { identity: "diamond_sum_rule", witness: w });

    // (y+y')⊲h = y⊲h + (y·y')⊲h.
    let mut w = None;
    'a: for y in 0..ni {
        for y2 in 0..ni {
            for h in 0..nh {
                if data.yleft[ig.add(y, y2)][h]
                    != ig.add(data.yleft[y][h], data.yleft[data.ideal.dot(y, y2)][h])
                {
                    w = Some(vec![y, y2, h]);
                    break 'a;
                }
            }
        }
    }
    report.push(CheckOutcome { identity: "yleft_additive_i", witness: w });

    report.push(CheckOutcome {
        identity: "yleft_diamond_exchange",
        witness: yleft_diamond_exchange_witness(data),
    });

    // f(h+h',h'') + ((h+h')◆beta(h,h'))⊲((h+h')·h'')
    //   = (h·h')◆f(h,h'') + f(h·h',h·h'') + ((h·h')◆f(h,h'))⊲((h·h')·(h·h'')).
    let mut w = None;
    'a: for h in 0..nh {
        for h2 in 0..nh {
            let hph = qg.add(h, h2);
            let hdh = data.quotient.dot(h, h2);
            for h3 in 0..nh {
                let lhs = ig.add(
                    data.f[hph][h3],
                    data.yleft[data.diamond[hph][data.beta[h][h2]]][data.quotient.dot(hph, h3)],
                );
                let hdh3 = data.quotient.dot(h, h3);
                let rhs = ig.add(
                    ig.add(data.diamond[hdh][data.f[h][h3]], data.f[hdh][hdh3]),
                    data.yleft[data.diamond[hdh][data.f[h][h2]]][data.quotient.dot(hdh, hdh3)],
                );
                if lhs != rhs {
                    w = Some(vec![h, h2, h3]);
                    break 'a;
                }
            }
        }
    }
    report.push(CheckOutcome { identity: "f_twisted_cocycle", witness: w });

    Ok(report)
}

/// Trivial-ideal reformulation: the triangle action `y◁h = h◆(y − y⊲h)`
/// is an associative additive action, `◆` is an (anti-composed) action by
/// automorphisms, and the exponent map `y^h = h^{-1}◆(y◁h)` is additive in
/// both arguments; when `⊲ = 0`, `f` additionally satisfies the twisted
/// cocycle rule without the `⊲` corrections. Errors when `I` is not a
/// trivial linear cycle set.
pub fn check_trivial_ideal(data: &ExtensionData) -> Result<Report, CheckOutcome> {
    let (ni, nh) = (data.ideal.size(), data.quotient.size());
    for a in 0..ni {
        for b in 0..ni {
            if data.ideal.dot(a, b) != b {
                return Err(CheckOutcome::fail("ideal_trivial", vec![a, b]));
            }
        }
    }
    let ig = data.ideal.group();
    let qg = data.quotient.group();
    let qb = lcs_to_brace(&data.quotient);
    let expo = |y: usize, h: usize| data.diamond[qb.inv(h)][data.triangle(y, h)];
    let mut report = Report::default();

    report.push(CheckOutcome {
        identity: "triangle_assoc",
        witness: triangle_assoc_witness(data),
    });

    let mut w = None;
    'a: for y in 0..ni {
        for y2 in 0..ni {
            for h in 0..nh {
                if data.triangle(ig.add(y, y2), h)
                    != ig.add(data.triangle(y, h), data.triangle(y2, h))
                {
                    w = Some(vec![y, y2, h]);
                    break 'a;
                }
            }
        }
    }
    report.push(CheckOutcome { identity: "triangle_additive", witness: w });

    let w = (0..ni).find(|&y| data.triangle(y, 0) != y).map(|y| vec![y]);
    report.push(CheckOutcome { identity: "triangle_unit", witness: w });

    // (h'h)◆y = h◆(h'◆y), with h'h the brace product of the quotient.
    let mut w = None;
    'a: for h in 0..nh {
        for h2 in 0..nh {
            for y in 0..ni {
                if data.diamond[qb.mul(h2, h)][y] != data.diamond[h][data.diamond[h2][y]] {
                    w = Some(vec![h, h2, y]);
                    break 'a;
                }
            }
        }
    }
    report.push(CheckOutcome { identity: "diamond_assoc", witness: w });

    let mut w = None;
    'a: for h in 0..nh {
        for y in 0..ni {
            for y2 in 0..ni {
                if data.diamond[h][ig.add(y, y2)] != ig.add(data.diamond[h][y], data.diamond[h][y2])
                {
                    w = Some(vec![h, y, y2]);
                    break 'a;
                }
            }
        }
    }
    report.push(CheckOutcome { identity: "diamond_additive", witness: w });

    let w = (0..ni).find(|&y| data.diamond[0][y] != y).map(|y| vec![y]);
    report.push(CheckOutcome { identity: "diamond_unit", witness: w });

    // y^{h+h'} + y = y^h + y^{h'} and 0^h = 0.
    let mut w = None;
    'a: for y in 0..ni {
        for h in 0..nh {
            for h2 in 0..nh {
                if ig.add(expo(y, qg.add(h, h2)), y) != ig.add(expo(y, h), expo(y, h2)) {
                    w = Some(vec![y, h, h2]);
                    break 'a;
                }
            }
        }
    }
    report.push(CheckOutcome { identity: "exponent_sum", witness: w });
    let w = (0..nh).find(|&h| expo(0, h) != 0).map(|h| vec![h]);
    report.push(CheckOutcome { identity: "exponent_zero", witness: w });

    let w = (0..ni).find(|&y| expo(y, 0) != y).map(|y| vec![y]);
    report.push(CheckOutcome { identity: "exponent_unit", witness: w });

    let mut w = None;
    'a: for y in 0..ni {
        for y2 in 0..ni {
            for h in 0..nh {
                if expo(ig.add(y, y2), h) != ig.add(expo(y, h), expo(y2, h)) {
                    w = Some(vec![y, y2, h]);
                    break 'a;
                }
            }
        }
    }
    report.push(CheckOutcome { identity: "exponent_additive", witness: w });

    // When ⊲ vanishes identically (the ideal lands in the socle of the
    // built product), f satisfies the plain twisted cocycle rule.
    if data.yleft.iter().all(|row| row.iter().all(|&v| v == 0)) {
        let mut w = None;
        'a: for h in 0..nh {
            for h2 in 0..nh {
                let hph = qg.add(h, h2);
                let hdh = data.quotient.dot(h, h2);
                for h3 in 0..nh {
                    let rhs = ig.add(
                        data.diamond[hdh][data.f[h][h3]],
                        data.f[hdh][data.quotient.dot(h, h3)],
                    );
                    if data.f[hph][h3] != rhs {
                        w = Some(vec![h, h2, h3]);
                        break 'a;
                    }
                }
            }
        }
        report.push(CheckOutcome { identity: "socle_f_cocycle", witness: w });
    }

    Ok(report)
}

/// The product structure on the index set `I×H` built from extension data.
/// Pairs are encoded as `y * |H| + h`. Construction is total and does not
/// imply validity; see [`validate_product`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProductExtension {
    data: ExtensionData,
    sum: Vec<Vec<usize>>,
    neg: Vec<usize>,
    dot: Vec<Vec<usize>>,
}

impl ProductExtension {
    pub fn data(&self) -> &ExtensionData {
        &self.data
    }

    pub fn size(&self) -> usize {
        self.sum.len()
    }

    pub fn pair_index(&self, y: usize, h: usize) -> usize {
        y * self.data.quotient.size() + h
    }

    pub fn pair_of(&self, b: usize) -> (usize, usize) {
        let nh = self.data.quotient.size();
        (b / nh, b % nh)
    }

    /// The canonical injection `ι(y) = (y, 0)`.
    pub fn iota(&self, y: usize) -> usize {
        self.pair_index(y, 0)
    }

    /// The canonical projection `π(y, h) = h`.
    pub fn pi(&self, b: usize) -> usize {
        b % self.data.quotient.size()
    }

    /// The canonical section `s(h) = w_h = (0, h)`.
    pub fn section(&self, h: usize) -> usize {
        h
    }

    pub fn sum_table(&self) -> &Vec<Vec<usize>> {
        &self.sum
    }

    pub fn neg_table(&self) -> &Vec<usize> {
        &self.neg
    }

    pub fn dot_table(&self) -> &Vec<Vec<usize>> {
        &self.dot
    }

    /// Assembles the product as a [`LinearCycleSet`] without re-validating
    /// the axioms. The caller asserts validity (e.g. the data was produced
    /// by an enumeration of checked cocycles); axioms are debug-asserted.
    pub fn lcs_unchecked(&self) -> LinearCycleSet {
        let group = AddGroup::from_tables_trusted(None, self.sum.clone(), self.neg.clone());
        lcs_from_table_trusted(group, self.dot.clone())
    }
}

/// Builds the product tables on `I×H` from the data (total; validity is
/// checked separately).
pub fn build_product_extension(data: &ExtensionData) -> ProductExtension {
    let (ni, nh) = (data.ideal.size(), data.quotient.size());
    let n = ni * nh;
    let ig = data.ideal.group();
    let qg = data.quotient.group();
    let mut sum = vec![vec![0usize; n]; n];
    let mut dot = vec![vec![0usize; n]; n];
    let mut neg = vec![0usize; n];
    for y in 0..ni {
        for h in 0..nh {
            let a = y * nh + h;
            let nh2 = qg.neg(h);
            neg[a] = ig.sub(ig.neg(y), data.beta[h][nh2]) * nh + nh2;
            for y2 in 0..ni {
                for h2 in 0..nh {
                    let b = y2 * nh + h2;
                    sum[a][b] = data.y_beta(y, y2, h, h2) * nh + qg.add(h, h2);
                    dot[a][b] = data.y_f(y, y2, h, h2) * nh + data.quotient.dot(h, h2);
                }
            }
        }
    }
    ProductExtension { data: data.clone(), sum, neg, dot }
}

/// Why a built product fails to be a valid extension.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ProductError {
    /// The twisted sum is not an abelian group.
    Sum(TableError),
    /// The dot table violates a linear cycle set axiom.
    Dot(LcsError),
    /// `ι` does not preserve the sum or the dot at `(y, y')`.
    Iota { y: usize, y2: usize },
    /// `π` does not preserve the sum or the dot at `(a, b)`.
    Pi { a: usize, b: usize },
}

impl fmt::Display for ProductError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ProductError::Sum(e) => write!(f, "product sum: {e}"),
            ProductError::Dot(e) => write!(f, "product dot: {e}"),
            ProductError::Iota { y, y2 } => write!(f, "injection not a morphism at ({y}, {y2})"),
            ProductError::Pi { a, b } => write!(f, "projection not a morphism at ({a}, {b})"),
        }
    }
}

/// Full validation of a built product: the twisted sum is an abelian group,
/// the dot table defines a linear cycle set, and the canonical injection
/// and projection are morphisms of linear cycle sets. Returns the validated
/// structure.
pub fn validate_product(ext: &ProductExtension) -> Result<LinearCycleSet, ProductError> {
    let group =
        AddGroup::from_tables(ext.sum.clone(), ext.neg.clone()).map_err(ProductError::Sum)?;
    let lcs = lcs_from_table(group, ext.dot.clone()).map_err(ProductError::Dot)?;
    let data = &ext.data;
    let (ni, nh) = (data.ideal.size(), data.quotient.size());
    for y in 0..ni {
        for y2 in 0..ni {
            let (a, b) = (ext.iota(y), ext.iota(y2));
            if ext.sum[a][b] != ext.iota(data.ideal.group().add(y, y2))
                || ext.dot[a][b] != ext.iota(data.ideal.dot(y, y2))
            {
                return Err(ProductError::Iota { y, y2 });
            }
        }
    }
    let n = ni * nh;
    for a in 0..n {
        for b in 0..n {
            if ext.pi(ext.sum[a][b]) != data.quotient.group().add(ext.pi(a), ext.pi(b))
                || ext.pi(ext.dot[a][b]) != data.quotient.dot(ext.pi(a), ext.pi(b))
            {
                return Err(ProductError::Pi { a, b });
            }
        }
    }
    Ok(lcs)
}

/// Errors from [`extract_data`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExtractError {
    /// A map table has the wrong length or an out-of-range entry.
    Shape,
    /// The injection is not an injective morphism of linear cycle sets.
    IotaInvalid,
    /// The projection is not a surjective morphism of linear cycle sets.
    PiInvalid,
    /// The kernel of the projection is not the image of the injection.
    NotExact,
    /// The section does not split the projection or has `s(0) ≠ 0`.
    SectionInvalid,
    /// An extracted value left the image of the injection.
    OutsideIdeal,
    /// The extracted tables violate a construction invariant.
    Data(CheckOutcome),
}

impl fmt::Display for ExtractError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtractError::Shape => write!(f, "map table has a wrong shape or entry"),
            ExtractError::IotaInvalid => write!(f, "injection is not an injective morphism"),
            ExtractError::PiInvalid => write!(f, "projection is not a surjective morphism"),
            ExtractError::NotExact => write!(f, "sequence is not exact"),
            ExtractError::SectionInvalid => write!(f, "section does not split the projection"),
            ExtractError::OutsideIdeal => write!(f, "extracted value outside the ideal image"),
            ExtractError::Data(o) => write!(f, "extracted data invalid: {o}"),
        }
    }
}

/// Extracts the describing tables `(beta, f, ◆, ⊲)` of an abstract
/// extension `0 → I → B → H → 0` along a section `s` of the projection
/// with `s(0) = 0`:
///
/// * `h◆y = s(h)·ι(y)`, `y⊲h = ι(y)·s(h) − s(h)` (both pulled back
///   through `ι`),
/// * `f(h,h') = ι^{-1}(s(h)·s(h') − s(h·h'))`,
/// * `beta(h,h') = ι^{-1}(s(h) + s(h') − s(h+h'))`.
pub fn extract_data(
    b: &LinearCycleSet,
    ideal: &LinearCycleSet,
    quotient: &LinearCycleSet,
    iota: &[usize],
    pi: &[usize],
    section: &[usize],
) -> Result<ExtensionData, ExtractError> {
    let (ni, nh, n) = (ideal.size(), quotient.size(), b.size());
    if iota.len() != ni
        || pi.len() != n
        || section.len() != nh
        || iota.iter().any(|&v| v >= n)
        || pi.iter().any(|&v| v >= nh)
        || section.iter().any(|&v| v >= n)
    {
        return Err(ExtractError::Shape);
    }
    // Injection: injective, additive, multiplicative.
    let mut inv_iota = vec![usize::MAX; n];
    for y in 0..ni {
        if inv_iota[iota[y]] != usize::MAX {
            return Err(ExtractError::IotaInvalid);
        }
        inv_iota[iota[y]] = y;
    }
    for y in 0..ni {
        for y2 in 0..ni {
            if iota[ideal.group().add(y, y2)] != b.group().add(iota[y], iota[y2])
                || iota[ideal.dot(y, y2)] != b.dot(iota[y], iota[y2])
            {
                return Err(ExtractError::IotaInvalid);
            }
        }
    }
    // Projection: surjective, additive, multiplicative.
    let mut hit = vec![false; nh];
    for &h in pi {
        hit[h] = true;
    }
    if !hit.iter().all(|&v| v) {
        return Err(ExtractError::PiInvalid);
    }
    for a in 0..n {
        for c in 0..n {
            if pi[b.group().add(a, c)] != quotient.group().add(pi[a], pi[c])
                || pi[b.dot(a, c)] != quotient.dot(pi[a], pi[c])
            {
                return Err(ExtractError::PiInvalid);
            }
        }
    }
    // Exactness: ker(π) = im(ι).
    for a in 0..n {
        if (pi[a] == 0) != (inv_iota[a] != usize::MAX) {
            return Err(ExtractError::NotExact);
        }
    }
    // Section of π with s(0) = 0.
    if section[0] != 0 || (0..nh).any(|h| pi[section[h]] != h) {
        return Err(ExtractError::SectionInvalid);
    }

    let pull = |v: usize| -> Result<usize, ExtractError> {
        match inv_iota[v] {
            usize::MAX => Err(ExtractError::OutsideIdeal),
            y => Ok(y),
        }
    };
    let mut diamond = vec![vec![0usize; ni]; nh];
    let mut yleft = vec![vec![0usize; nh]; ni];
    let mut f = vec![vec![0usize; nh]; nh];
    let mut beta = vec![vec![0usize; nh]; nh];
    for h in 0..nh {
        for y in 0..ni {
            diamond[h][y] = pull(b.dot(section[h], iota[y]))?;
            yleft[y][h] = pull(b.group().sub(b.dot(iota[y], section[h]), section[h]))?;
        }
        for h2 in 0..nh {
            f[h][h2] =
                pull(b.group().sub(b.dot(section[h], section[h2]), section[quotient.dot(h, h2)]))?;
            beta[h][h2] = pull(b.group().sub(
                b.group().add(section[h], section[h2]),
                section[quotient.group().add(h, h2)],
            ))?;
        }
    }
    ExtensionData::new(ideal.clone(), quotient.clone(), beta, f, diamond, yleft)
        .map_err(|e| match e {
            DataError::Shape => ExtractError::Shape,
            DataError::Invariant(o) => ExtractError::Data(o),
        })
}

/// A map `φ: H → I` with `φ(0) = 0` whose induced map
/// `(y, h) ↦ (y + φ(h), h)` is an isomorphism of extensions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquivalenceWitness {
    pub phi: Vec<usize>,
}

/// Errors from [`extensions_equivalent`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EquivalenceError {
    /// The two extensions are not over the same ideal and quotient.
    Mismatch,
    /// The search space `|I|^(|H|-1)` exceeds the guard.
    Guard { needed: u128, max: u64 },
}

impl fmt::Display for EquivalenceError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EquivalenceError::Mismatch => {
                write!(f, "extensions are not over the same ideal and quotient")
            }
            EquivalenceError::Guard { needed, max } => {
                write!(f, "equivalence search space {needed} exceeds the guard {max}")
            }
        }
    }
}

fn phi_space(ni: usize, nh: usize) -> u128 {
    let mut s: u128 = 1;
    for _ in 1..nh {
        s = s.saturating_mul(ni as u128);
    }
    s
}

/// Advances `phi` (with `phi[0]` pinned to 0) to the lexicographically next
/// map `H → I`; returns false after the last one.
fn next_phi(phi: &mut [usize], ni: usize) -> bool {
    for k in (1..phi.len()).rev() {
        if phi[k] + 1 < ni {
            phi[k] += 1;
            return true;
        }
        phi[k] = 0;
    }
    false
}

/// Decides equivalence of two product extensions over the same ideal and
/// quotient by exhausting maps `φ: H → I` with `φ(0) = 0` in lexicographic
/// order and testing whether `(y, h) ↦ (y + φ(h), h)` is an isomorphism of
/// the two table structures. Returns the least witness, or `None` when the
/// extensions are inequivalent (in particular immediately when the two
/// actions differ). The search is guarded by `max_search ≥ |I|^(|H|-1)`.
pub fn extensions_equivalent(
    e1: &ProductExtension,
    e2: &ProductExtension,
    max_search: u64,
) -> Result<Option<EquivalenceWitness>, EquivalenceError> {
    let d1 = &e1.data;
    let d2 = &e2.data;
    if d1.ideal.dot_table() != d2.ideal.dot_table()
        || !d1.ideal.group().same_tables(d2.ideal.group())
        || d1.quotient.dot_table() != d2.quotient.dot_table()
        || !d1.quotient.group().same_tables(d2.quotient.group())
    {
        return Err(EquivalenceError::Mismatch);
    }
    // Equivalent extensions induce the same actions, so differing actions
    // mean "inequivalent" without a search.
    if d1.diamond != d2.diamond || d1.yleft != d2.yleft {
        return Ok(None);
    }
    let (ni, nh) = (d1.ideal.size(), d1.quotient.size());
    let needed = phi_space(ni, nh);
    if needed > max_search as u128 {
        return Err(EquivalenceError::Guard { needed, max: max_search });
    }
    let ig = d1.ideal.group();
    let qg = d1.quotient.group();
    let n = ni * nh;
    let mut phi = vec![0usize; nh];
    loop {
        // Cheap necessary condition: the betas differ by the coboundary of φ.
        let compatible = (0..nh).all(|h| {
            (0..nh).all(|h2| {
                ig.sub(d1.beta[h][h2], d2.beta[h][h2])
                    == ig.sub(ig.add(phi[h], phi[h2]), phi[qg.add(h, h2)])
            })
        });
        if compatible {
            let m = |a: usize| -> usize {
                let (y, h) = e1.pair_of(a);
                e1.pair_index(ig.add(y, phi[h]), h)
            };
            let iso = (0..n).all(|a| {
                (0..n).all(|c| {
                    m(e1.sum[a][c]) == e2.sum[m(a)][m(c)] && m(e1.dot[a][c]) == e2.dot[m(a)][m(c)]
                })
            });
            if iso {
                assert_witness_consequences(d1, d2, &phi);
                return Ok(Some(EquivalenceWitness { phi }));
            }
        }
        if !next_phi(&mut phi, ni) {
            return Ok(None);
        }
    }
}

/// Consequences every genuine equivalence witness must satisfy; violated
/// assertions would indicate an internal inconsistency.
fn assert_witness_consequences(d1: &ExtensionData, d2: &ExtensionData, phi: &[usize]) {
    let nh = d1.quotient.size();
    let ig = d1.ideal.group();
    let qg = d1.quotient.group();
    for h in 0..nh {
        for h2 in 0..nh {
            // β₂(h,h') = β₁(h,h') + φ(h+h') − φ(h) − φ(h'): the sum parts of
            // the isomorphism (y,h) ↦ (y+φ(h),h), read on section values.
            assert_eq!(
                d2.beta[h][h2],
                ig.sub(
                    ig.add(d1.beta[h][h2], phi[qg.add(h, h2)]),
                    ig.add(phi[h], phi[h2]),
                ),
                "equivalence witness violates the sum-compatibility consequence"
            );
            // The dot parts of the isomorphism on section values.
            let hdh = d1.quotient.dot(h, h2);
            assert_eq!(
                d2.y_f(phi[h], phi[h2], h, h2),
                ig.add(d1.y_f(0, 0, h, h2), phi[hdh]),
                "equivalence witness violates the dot-compatibility consequence"
            );
        }
    }
}

/// Transports a cocycle pair along `φ: H → I` (with `φ(0) = 0`): the
/// returned `(beta', f')` describe the pushforward of the extension of
/// `data` under `(y, h) ↦ (y + φ(h), h)`, read off through the canonical
/// section of the pushforward. The actions are unchanged by transport.
pub fn transport_cocycle(
    data: &ExtensionData,
    phi: &[usize],
) -> (Vec<Vec<usize>>, Vec<Vec<usize>>) {
    let nh = data.quotient.size();
    let ig = data.ideal.group();
    let qg = data.quotient.group();
    let mut beta = vec![vec![0usize; nh]; nh];
    let mut f = vec![vec![0usize; nh]; nh];
    for h in 0..nh {
        for h2 in 0..nh {
            // Pull the canonical section back (ideal parts −φ), apply the
            // original operations, push forward (add φ at the result).
            let (a, b) = (ig.neg(phi[h]), ig.neg(phi[h2]));
            beta[h][h2] = ig.add(data.y_beta(a, b, h, h2), phi[qg.add(h, h2)]);
            f[h][h2] = ig.add(data.y_f(a, b, h, h2), phi[data.quotient.dot(h, h2)]);
        }
    }
    (beta, f)
}

/// Errors from [`classify_extensions`] and [`enumerate_valid_cocycles`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ClassifyError {
    /// Classification is defined for trivial ideals only.
    IdealNotTrivial,
    /// The fixed actions do not satisfy the trivial-ideal action laws.
    Inadmissible(CheckOutcome),
    /// A carrier exceeds the classification order guard.
    OrderGuard { order: usize, max: usize },
    /// The equivalence search space exceeds the guard.
    SearchGuard { needed: u128, max: u64 },
}

impl fmt::Display for ClassifyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassifyError::IdealNotTrivial => {
                write!(f, "classification requires a trivial ideal")
            }
            ClassifyError::Inadmissible(o) => write!(f, "inadmissible actions: {o}"),
            ClassifyError::OrderGuard { order, max } => {
                write!(f, "carrier order {order} exceeds the classification guard {max}")
            }
            ClassifyError::SearchGuard { needed, max } => {
                write!(f, "search space {needed} exceeds the guard {max}")
            }
        }
    }
}

/// Checks that a trivial ideal plus fixed actions admit extensions: the
/// construction invariants and the trivial-ideal action laws hold for the
/// zero cocycle pair.
pub fn admissible_actions(
    ideal: &LinearCycleSet,
    quotient: &LinearCycleSet,
    diamond: &[Vec<usize>],
    yleft: &[Vec<usize>],
) -> Result<(), ClassifyError> {
    if !ideal.is_trivial() {
        return Err(ClassifyError::IdealNotTrivial);
    }
    let nh = quotient.size();
    let data = ExtensionData::from_tables(
        ideal.clone(),
        quotient.clone(),
        zero_pairing(nh),
        zero_pairing(nh),
        diamond.to_vec(),
        yleft.to_vec(),
    )
    .map_err(|_| ClassifyError::Inadmissible(CheckOutcome::fail("table_shape", Vec::new())))?;
    let mut report = data.validate_basic();
    report.push(CheckOutcome {
        identity: "diamond_bijective",
        witness: diamond_bijective_witness(&data),
    });
    if let Some(o) = report.first_failure() {
        return Err(ClassifyError::Inadmissible(o.clone()));
    }
    let laws = check_trivial_ideal(&data).map_err(ClassifyError::Inadmissible)?;
    match laws.first_failure() {
        None => Ok(()),
        Some(o) => Err(ClassifyError::Inadmissible(o.clone())),
    }
}

/// Backtracking enumeration of all valid cocycle pairs `(beta, f)` for a
/// trivial ideal and fixed admissible actions, in lexicographic order of
/// the flattened `(beta, f)` tables.
///
/// With a trivial ideal the general condition ledger reduces, for fixed
/// admissible actions, to: `beta` is a normalized symmetric 2-cocycle, `f`
/// is normalized, and the two identities coupling `beta` and `f` (the sum
/// compatibility and the twisted cocycle rule) hold. The search assigns
/// free table cells in lexicographic order and checks every identity
/// instance as soon as its last cell is assigned.
pub fn enumerate_valid_cocycles(
    ideal: &LinearCycleSet,
    quotient: &LinearCycleSet,
    diamond: &[Vec<usize>],
    yleft: &[Vec<usize>],
) -> Result<Vec<(Vec<Vec<usize>>, Vec<Vec<usize>>)>, ClassifyError> {
    admissible_actions(ideal, quotient, diamond, yleft)?;
    let (ni, nh) = (ideal.size(), quotient.size());
    let ig = ideal.group();
    let qg = quotient.group();

    // --- beta: free cells are the unordered pairs (h ≤ h') of non-zero
    // arguments; symmetry and normalization hold by construction.
    let mut bcells: Vec<(usize, usize)> = Vec::new();
    let mut bcell_of = vec![vec![usize::MAX; nh]; nh]; // MAX marks "constant 0"
    for h in 1..nh {
        for h2 in h..nh {
            bcell_of[h][h2] = bcells.len();
            bcell_of[h2][h] = bcells.len();
            bcells.push((h, h2));
        }
    }
    let bcell = |h: usize, h2: usize| -> usize {
        if h == 0 || h2 == 0 {
            usize::MAX
        } else {
            bcell_of[h][h2]
        }
    };
    // Cocycle instances grouped by the last cell they touch.
    let mut binst: Vec<Vec<(usize, usize, usize)>> = vec![Vec::new(); bcells.len()];
    for h in 1..nh {
        for h2 in 1..nh {
            for h3 in 1..nh {
                let cells = [
                    bcell(h, h2),
                    bcell(qg.add(h, h2), h3),
                    bcell(h2, h3),
                    bcell(h, qg.add(h2, h3)),
                ];
                let last = cells.iter().copied().filter(|&c| c != usize::MAX).max();
                if let Some(last) = last {
                    binst[last].push((h, h2, h3));
                }
            }
        }
    }

    let mut betas: Vec<Vec<usize>> = Vec::new(); // flat cell assignments
    {
        let mut vals = vec![0usize; bcells.len()];
        let bval = |vals: &[usize], h: usize, h2: usize| -> usize {
            match bcell(h, h2) {
                usize::MAX => 0,
                c => vals[c],
            }
        };
        fn dfs_beta(
            k: usize,
            ni: usize,
            ig: &AddGroup,
            qg: &AddGroup,
            binst: &[Vec<(usize, usize, usize)>],
            bval: &dyn Fn(&[usize], usize, usize) -> usize,
            vals: &mut Vec<usize>,
            out: &mut Vec<Vec<usize>>,
        ) {
            if k == vals.len() {
                out.push(vals.clone());
                return;
            }
            for v in 0..ni {
                vals[k] = v;
                let ok = binst[k].iter().all(|&(h, h2, h3)| {
                    ig.add(bval(vals, h, h2), bval(vals, qg.add(h, h2), h3))
                        == ig.add(bval(vals, h2, h3), bval(vals, h, qg.add(h2, h3)))
                });
                if ok {
                    dfs_beta(k + 1, ni, ig, qg, binst, bval, vals, out);
                }
            }
            vals[k] = 0;
        }
        if bcells.is_empty() {
            betas.push(Vec::new());
        } else {
            dfs_beta(0, ni, ig, qg, &binst, &bval, &mut vals, &mut betas);
        }
    }

    // --- f: free cells are the pairs (h, h') of non-zero arguments.
    let mut fcells: Vec<(usize, usize)> = Vec::new();
    let mut fcell_of = vec![vec![usize::MAX; nh]; nh];
    for h in 1..nh {
        for h2 in 1..nh {
            fcell_of[h][h2] = fcells.len();
            fcells.push((h, h2));
        }
    }
    let fcell = |h: usize, h2: usize| -> usize {
        if h == 0 || h2 == 0 {
            usize::MAX
        } else {
            fcell_of[h][h2]
        }
    };
    // Identity instances grouped by the last f-cell they touch. Instances
    // with a zero argument hold automatically under the normalization.
    #[derive(Clone, Copy)]
    enum FKind {
        SumCompat,
        Twisted,
    }
    let mut finst: Vec<Vec<(FKind, usize, usize, usize)>> = vec![Vec::new(); fcells.len()];
    for h in 1..nh {
        for h2 in 1..nh {
            for h3 in 1..nh {
                let sc = [fcell(h, qg.add(h2, h3)), fcell(h, h2), fcell(h, h3)];
                if let Some(last) = sc.iter().copied().filter(|&c| c != usize::MAX).max() {
                    finst[last].push((FKind::SumCompat, h, h2, h3));
                }
                let tw = [
                    fcell(qg.add(h, h2), h3),
                    fcell(h, h3),
                    fcell(quotient.dot(h, h2), quotient.dot(h, h3)),
                    fcell(h, h2),
                ];
                if let Some(last) = tw.iter().copied().filter(|&c| c != usize::MAX).max() {
                    finst[last].push((FKind::Twisted, h, h2, h3));
                }
            }
        }
    }

    let mut out: Vec<(Vec<Vec<usize>>, Vec<Vec<usize>>)> = Vec::new();
    for bvals in &betas {
        let mut beta = zero_pairing(nh);
        for (k, &(h, h2)) in bcells.iter().enumerate() {
            beta[h][h2] = bvals[k];
            beta[h2][h] = bvals[k];
        }
        let fval = |vals: &[usize], h: usize, h2: usize| -> usize {
            match fcell(h, h2) {
                usize::MAX => 0,
                c => vals[c],
            }
        };
        let check = |vals: &[usize], kind: FKind, h: usize, h2: usize, h3: usize| -> bool {
            match kind {
                FKind::SumCompat => {
                    let lhs = ig.add(diamond[h][beta[h2][h3]], fval(vals, h, qg.add(h2, h3)));
                    let rhs = ig.add(
                        ig.add(fval(vals, h, h2), fval(vals, h, h3)),
                        beta[quotient.dot(h, h2)][quotient.dot(h, h3)],
                    );
                    lhs == rhs
                }
                FKind::Twisted => {
                    let hph = qg.add(h, h2);
                    let hdh = quotient.dot(h, h2);
                    let hdh3 = quotient.dot(h, h3);
                    let lhs = ig.add(
                        fval(vals, hph, h3),
                        yleft[diamond[hph][beta[h][h2]]][quotient.dot(hph, h3)],
                    );
                    let rhs = ig.add(
                        ig.add(diamond[hdh][fval(vals, h, h3)], fval(vals, hdh, hdh3)),
                        yleft[diamond[hdh][fval(vals, h, h2)]][quotient.dot(hdh, hdh3)],
                    );
                    lhs == rhs
                }
            }
        };
        fn dfs_f(
            k: usize,
            ni: usize,
            finst: &[Vec<(FKind, usize, usize, usize)>],
            check: &dyn Fn(&[usize], FKind, usize, usize, usize) -> bool,
            vals: &mut Vec<usize>,
            found: &mut Vec<Vec<usize>>,
        ) {
            if k == vals.len() {
                found.push(vals.clone());
                return;
            }
            for v in 0..ni {
                vals[k] = v;
                if finst[k].iter().all(|&(kind, h, h2, h3)| check(vals, kind, h, h2, h3)) {
                    dfs_f(k + 1, ni, finst, check, vals, found);
                }
            }
            vals[k] = 0;
        }
        let mut found: Vec<Vec<usize>> = Vec::new();
        if fcells.is_empty() {
            found.push(Vec::new());
        } else {
            let mut vals = vec![0usize; fcells.len()];
            dfs_f(0, ni, &finst, &check, &mut vals, &mut found);
        }
        for fvals in found {
            let mut f = zero_pairing(nh);
            for (k, &(h, h2)) in fcells.iter().enumerate() {
                f[h][h2] = fvals[k];
            }
            out.push((beta.clone(), f));
        }
    }
    Ok(out)
}

/// The result of classifying extensions of a quotient by a trivial ideal
/// with fixed actions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification {
    /// All valid cocycle pairs, in lexicographic order.
    pub cocycles: Vec<(Vec<Vec<usize>>, Vec<Vec<usize>>)>,
    /// Equivalence class index of each cocycle pair.
    pub class_of: Vec<usize>,
    /// Lexicographically least cocycle index of each class.
    pub representatives: Vec<usize>,
}

impl Classification {
    pub fn class_count(&self) -> usize {
        self.representatives.len()
    }
}

/// Enumerates all valid cocycle pairs for a trivial ideal and fixed
/// admissible actions and groups them into equivalence classes by
/// transporting each pair along every `φ: H → I` (every equivalence of
/// product extensions is of this transport form).
pub fn classify_extensions(
    ideal: &LinearCycleSet,
    quotient: &LinearCycleSet,
    diamond: &[Vec<usize>],
    yleft: &[Vec<usize>],
    max_order: usize,
    max_search: u64,
) -> Result<Classification, ClassifyError> {
    let (ni, nh) = (ideal.size(), quotient.size());
    if ni > max_order {
        return Err(ClassifyError::OrderGuard { order: ni, max: max_order });
    }
    if nh > max_order {
        return Err(ClassifyError::OrderGuard { order: nh, max: max_order });
    }
    let needed = phi_space(ni, nh);
    if needed > max_search as u128 {
        return Err(ClassifyError::SearchGuard { needed, max: max_search });
    }
    let cocycles = enumerate_valid_cocycles(ideal, quotient, diamond, yleft)?;
    let index: BTreeMap<&(Vec<Vec<usize>>, Vec<Vec<usize>>), usize> =
        cocycles.iter().enumerate().map(|(i, c)| (c, i)).collect();
    let mut class_of = vec![usize::MAX; cocycles.len()];
    let mut representatives = Vec::new();
    for i in 0..cocycles.len() {
        if class_of[i] != usize::MAX {
            continue;
        }
        let class = representatives.len();
        representatives.push(i);
        let data = ExtensionData::from_tables(
            ideal.clone(),
            quotient.clone(),
            cocycles[i].0.clone(),
            cocycles[i].1.clone(),
            diamond.to_vec(),
            yleft.to_vec(),
        )
        .expect("enumerated tables are well shaped");
        // Transports along φ form a group action, so one sweep from any
        // member covers its whole class.
        let mut phi = vec![0usize; nh];
        loop {
            let pair = transport_cocycle(&data, &phi);
            let j = *index
                .get(&pair)
                .expect("transport of a valid cocycle pair is a valid cocycle pair");
            debug_assert!(class_of[j] == usize::MAX || class_of[j] == class);
            class_of[j] = class;
            if !next_phi(&mut phi, ni) {
                break;
            }
        }
    }
    Ok(Classification { cocycles, class_of, representatives })
}

/// Errors from [`enumerate_admissible_actions`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ActionEnumError {
    IdealNotTrivial,
    Guard { candidates: u128, max: u64 },
}

impl fmt::Display for ActionEnumError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ActionEnumError::IdealNotTrivial => {
                write!(f, "action enumeration requires a trivial ideal")
            }
            ActionEnumError::Guard { candidates, max } => {
                write!(f, "action candidate space {candidates} exceeds the guard {max}")
            }
        }
    }
}

/// Enumerates all admissible action pairs `(◆, ⊲)` for a trivial ideal and
/// a quotient, in lexicographic order of the flattened tables.
///
/// The action laws force every `h◆` to be an additive automorphism and
/// every `y ↦ y⊲h` to be an additive endomorphism of `I`, so the search
/// ranges over those row choices and filters by the trivial-ideal ledger.
pub fn enumerate_admissible_actions(
    ideal: &LinearCycleSet,
    quotient: &LinearCycleSet,
    max_candidates: u64,
) -> Result<Vec<(Vec<Vec<usize>>, Vec<Vec<usize>>)>, ActionEnumError> {
    if !ideal.is_trivial() {
        return Err(ActionEnumError::IdealNotTrivial);
    }
    let (ni, nh) = (ideal.size(), quotient.size());
    let auts = additive_automorphisms(ideal.group());
    let endos = additive_endomorphisms(ideal.group());
    let qb = lcs_to_brace(quotient);
    let space = |base: usize| -> u128 {
        let mut s: u128 = 1;
        for _ in 1..nh {
            s = s.saturating_mul(base as u128);
        }
        s
    };
    let candidates = space(auts.len()).saturating_add(space(endos.len()));
    if candidates > max_candidates as u128 {
        return Err(ActionEnumError::Guard { candidates, max: max_candidates });
    }

    // Diamond candidates: identity row at 0, automorphism rows elsewhere,
    // pre-filtered by the composition law (h'h)◆y = h◆(h'◆y).
    let identity: Vec<usize> = (0..ni).collect();
    let mut diamonds: Vec<Vec<Vec<usize>>> = Vec::new();
    let mut choice = vec![0usize; nh]; // index into auts per h ≥ 1
    loop {
        let dia: Vec<Vec<usize>> = (0..nh)
            .map(|h| if h == 0 { identity.clone() } else { auts[choice[h]].clone() })
            .collect();
        let ok = (0..nh).all(|h| {
            (0..nh).all(|h2| (0..ni).all(|y| dia[qb.mul(h2, h)][y] == dia[h][dia[h2][y]]))
        });
        if ok {
            diamonds.push(dia);
        }
        if !next_phi(&mut choice, auts.len()) {
            break;
        }
    }

    let mut out = Vec::new();
    for dia in &diamonds {
        let mut choice = vec![0usize; nh]; // index into endos per h ≥ 1
        loop {
            let mut yleft = vec![vec![0usize; nh]; ni];
            for h in 1..nh {
                for y in 0..ni {
                    yleft[y][h] = endos[choice[h]][y];
                }
            }
            if admissible_actions(ideal, quotient, dia, &yleft).is_ok() {
                out.push((dia.clone(), yleft));
            }
            if !next_phi(&mut choice, endos.len()) {
                break;
            }
        }
    }
    out.sort();
    Ok(out)
}

/// Errors from [`sigma_nu_check`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SigmaNuError {
    IdealNotTrivial,
    Invalid(ProductError),
}

impl fmt::Display for SigmaNuError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SigmaNuError::IdealNotTrivial => write!(f, "check requires a trivial ideal"),
            SigmaNuError::Invalid(e) => write!(f, "extension is not valid: {e}"),
        }
    }
}

/// Validates the product, then compares the triangle action with brace
/// conjugation and the inverse-translation maps; see [`sigma_nu_report`].
pub fn sigma_nu_check(ext: &ProductExtension) -> Result<Report, SigmaNuError> {
    if !ext.data.ideal.is_trivial() {
        return Err(SigmaNuError::IdealNotTrivial);
    }
    let b = validate_product(ext).map_err(SigmaNuError::Invalid)?;
    Ok(sigma_nu_report(ext, &b))
}

/// For a valid product extension with trivial ideal, verifies pointwise in
/// the brace of the product `B`:
///
/// * `ι(y◁h) = w_h^{-1} ι(y) w_h` (the triangle action is multiplicative
///   conjugation by the canonical section), and
/// * `(w_h)^{-1}·ι(y) = w_{h^{-1}}·ι(y) = ι(h^{-1}◆y)` (the inverse
///   translation of the section acts as the inverse diamond action).
///
/// `b` must be the validated linear cycle set of `ext`.
pub fn sigma_nu_report(ext: &ProductExtension, b: &LinearCycleSet) -> Report {
    let data = &ext.data;
    let (ni, nh) = (data.ideal.size(), data.quotient.size());
    let bb = lcs_to_brace(b);
    let qb = lcs_to_brace(&data.quotient);
    let mut report = Report::default();

    let mut w = None;
    'a: for y in 0..ni {
        for h in 0..nh {
            let wh = ext.section(h);
            let conj = bb.mul(bb.mul(bb.inv(wh), ext.iota(y)), wh);
            if ext.iota(data.triangle(y, h)) != conj {
                w = Some(vec![y, h]);
                break 'a;
            }
        }
    }
    report.push(CheckOutcome { identity: "triangle_is_conjugation", witness: w });

    let mut w = None;
    'a: for y in 0..ni {
        for h in 0..nh {
            let wh = ext.section(h);
            let lhs = b.dot(bb.inv(wh), ext.iota(y));
            if lhs != b.dot(ext.section(qb.inv(h)), ext.iota(y)) {
                w = Some(vec![y, h]);
                break 'a;
            }
            if lhs != ext.iota(data.diamond[qb.inv(h)][y]) {
                w = Some(vec![y, h]);
                break 'a;
            }
        }
    }
    report.push(CheckOutcome { identity: "nu_is_inverse_diamond", witness: w });

    report
}
