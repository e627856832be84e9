//! JSON descriptors for the library's table-driven inputs.
//!
//! Groups are given by invariant-factor lists, linear cycle sets by a group
//! plus an optional dot table ("trivial" or omitted means `a·b = b`), and
//! action/pairing tables accept the shorthands `"trivial"` (for `◆`) and
//! `"zero"` (for `⊲`, `beta`, and `f`).

use serde::Deserialize;

use cycleset::abelian::{group_from_orders, FiniteAbelianGroup};
use cycleset::extension::{trivial_diamond, zero_pairing, zero_yleft, ExtensionData};
use cycleset::lcs::{lcs_from_table, trivial_lcs, AddGroup, LcsError, LinearCycleSet};

/// A table or a named shorthand.
#[derive(Clone, Debug, Deserialize)]
#[serde(untagged)]
pub enum TableSpec {
    Keyword(String),
    Table(Vec<Vec<usize>>),
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupDesc {
    pub orders: Vec<u64>,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LcsDesc {
    pub group: GroupDesc,
    #[serde(default)]
    pub dot: Option<TableSpec>,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExtensionDesc {
    #[serde(rename = "I")]
    pub ideal: LcsDesc,
    #[serde(rename = "H")]
    pub quotient: LcsDesc,
    #[serde(default)]
    pub beta: Option<TableSpec>,
    #[serde(default)]
    pub f: Option<TableSpec>,
    #[serde(default)]
    pub diamond: Option<TableSpec>,
    #[serde(default)]
    pub yleft: Option<TableSpec>,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ActionsDesc {
    #[serde(rename = "I")]
    pub ideal: LcsDesc,
    #[serde(rename = "H")]
    pub quotient: LcsDesc,
    #[serde(default)]
    pub diamond: Option<TableSpec>,
    #[serde(default)]
    pub yleft: Option<TableSpec>,
}

/// Input of `cohomology` and `complex-check`: the coefficient group is a
/// plain abelian group, not a linear cycle set.
#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CohomologyDesc {
    #[serde(rename = "H")]
    pub quotient: LcsDesc,
    #[serde(rename = "I")]
    pub coefficients: GroupDesc,
    #[serde(default)]
    pub diamond: Option<TableSpec>,
    #[serde(default)]
    pub yleft: Option<TableSpec>,
    #[serde(default)]
    pub degree: Option<usize>,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExtractDesc {
    #[serde(rename = "B")]
    pub total: LcsDesc,
    #[serde(rename = "I")]
    pub ideal: LcsDesc,
    #[serde(rename = "H")]
    pub quotient: LcsDesc,
    pub iota: Vec<usize>,
    pub pi: Vec<usize>,
    #[serde(default)]
    pub section: Option<Vec<usize>>,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EquivalentDesc {
    pub first: ExtensionDesc,
    pub second: ExtensionDesc,
}

/// Input errors that are the user's data, not the program, being wrong.
#[derive(Clone, Debug)]
pub enum InputError {
    /// Malformed descriptor (bad shorthand, wrong shape, oversize group).
    Bad(String),
    /// A supplied dot table violates the cycle-set axioms.
    InvalidLcs(LcsError),
}

impl InputError {
    pub fn message(&self) -> String {
        match self {
            InputError::Bad(m) => m.clone(),
            InputError::InvalidLcs(e) => format!("dot table is not a linear cycle set: {e}"),
        }
    }
}

impl GroupDesc {
    pub fn to_group(&self) -> Result<FiniteAbelianGroup, InputError> {
        group_from_orders(&self.orders)
            .map_err(|e| InputError::Bad(format!("invalid group orders: {e}")))
    }
}

impl LcsDesc {
    pub fn to_lcs(&self) -> Result<LinearCycleSet, InputError> {
        let g = self.to_group()?.ok_or_else(|| {
            InputError::Bad("group too large for table form".to_string())
        })?;
        match &self.dot {
            None => Ok(trivial_lcs(g)),
            Some(TableSpec::Keyword(k)) if k == "trivial" => Ok(trivial_lcs(g)),
            Some(TableSpec::Keyword(k)) => {
                Err(InputError::Bad(format!("unknown dot shorthand {k:?}")))
            }
            Some(TableSpec::Table(t)) => {
                lcs_from_table(g, t.clone()).map_err(InputError::InvalidLcs)
            }
        }
    }

    fn to_group(&self) -> Result<Option<AddGroup>, InputError> {
        let g = group_from_orders(&self.group.orders)
            .map_err(|e| InputError::Bad(format!("invalid group orders: {e}")))?;
        Ok(AddGroup::from_group(&g).ok())
    }
}

/// Expands a table-or-shorthand into a concrete table.
fn expand(
    spec: &Option<TableSpec>,
    field: &str,
    shorthand: &str,
    default: Vec<Vec<usize>>,
) -> Result<Vec<Vec<usize>>, InputError> {
    match spec {
        None => Ok(default),
        Some(TableSpec::Keyword(k)) if k == shorthand => Ok(default),
        Some(TableSpec::Keyword(k)) => {
            Err(InputError::Bad(format!("unknown {field} shorthand {k:?}")))
        }
        Some(TableSpec::Table(t)) => Ok(t.clone()),
    }
}

pub fn expand_diamond(
    spec: &Option<TableSpec>,
    ni: usize,
    nh: usize,
) -> Result<Vec<Vec<usize>>, InputError> {
    expand(spec, "diamond", "trivial", trivial_diamond(ni, nh))
}

pub fn expand_yleft(
    spec: &Option<TableSpec>,
    ni: usize,
    nh: usize,
) -> Result<Vec<Vec<usize>>, InputError> {
    expand(spec, "yleft", "zero", zero_yleft(ni, nh))
}

pub fn expand_pairing(
    spec: &Option<TableSpec>,
    field: &str,
    nh: usize,
) -> Result<Vec<Vec<usize>>, InputError> {
    expand(spec, field, "zero", zero_pairing(nh))
}

impl ExtensionDesc {
    pub fn to_data(&self) -> Result<ExtensionData, InputError> {
        let ideal = self.ideal.to_lcs()?;
        let quotient = self.quotient.to_lcs()?;
        let (ni, nh) = (ideal.size(), quotient.size());
        let beta = expand_pairing(&self.beta, "beta", nh)?;
        let f = expand_pairing(&self.f, "f", nh)?;
        let diamond = expand_diamond(&self.diamond, ni, nh)?;
        let yleft = expand_yleft(&self.yleft, ni, nh)?;
        ExtensionData::from_tables(ideal, quotient, beta, f, diamond, yleft)
            .map_err(|e| InputError::Bad(format!("extension data: {e}")))
    }
}
