//! The JSON problem format: supports, an optional lifting and an optional
//! translation vector. Rationals are written as strings `"p/q"` or integers.

use serde::{Deserialize, Serialize};
use sparse_resultant::error::{Error, Result};
use sparse_resultant::num::{format_rat, parse_rat, Point, Rat};
use sparse_resultant::subdivision::{Lifting, SupportFamily};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum RatJson {
    Int(i64),
    Text(String),
}

impl RatJson {
    pub fn parse(&self) -> Result<Rat> {
        match self {
            RatJson::Int(n) => Ok(Rat::from_integer((*n).into())),
            RatJson::Text(s) => parse_rat(s),
        }
    }

    pub fn from_rat(r: &Rat) -> RatJson {
        RatJson::Text(format_rat(r))
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LiftingMode {
    /// One row `[c, l_1, …, l_n]` per support: `ν_i(a) = c + ⟨l, a⟩`.
    Affine,
    /// One value per point of each support.
    Pointwise,
    /// A seeded generic lifting.
    #[default]
    Auto,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct LiftingJson {
    #[serde(default)]
    pub mode: LiftingMode,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub values: Option<Vec<Vec<RatJson>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum DeltaJson {
    Values(Vec<RatJson>),
    Auto(String),
}

impl Default for DeltaJson {
    fn default() -> Self {
        DeltaJson::Auto("auto".into())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Problem {
    pub rank: usize,
    pub supports: Vec<Vec<Point>>,
    #[serde(default)]
    pub lifting: LiftingJson,
    #[serde(default)]
    pub delta: DeltaJson,
}

impl Problem {
    pub fn from_json(text: &str) -> Result<Problem> {
        serde_json::from_str(text).map_err(|e| Error::Input(format!("malformed problem file: {e}")))
    }

    pub fn read(path: &std::path::Path) -> Result<Problem> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Input(format!("cannot read {}: {e}", path.display())))?;
        Problem::from_json(&text)
    }

    pub fn family(&self) -> Result<SupportFamily> {
        SupportFamily::new(self.rank, self.supports.clone())
    }

    /// The explicit lifting, or `None` in automatic mode.
    pub fn lifting(&self, family: &SupportFamily) -> Result<Option<Lifting>> {
        let values = || {
            self.lifting
                .values
                .as_ref()
                .ok_or_else(|| Error::Input("an explicit lifting needs values".into()))?
                .iter()
                .map(|row| row.iter().map(RatJson::parse).collect::<Result<Vec<Rat>>>())
                .collect::<Result<Vec<_>>>()
        };
        match self.lifting.mode {
            LiftingMode::Auto => Ok(None),
            LiftingMode::Pointwise => Lifting::pointwise(family, values()?).map(Some),
            LiftingMode::Affine => {
                let rows = values()?;
                if rows.iter().any(|r| r.len() != family.rank + 1) {
                    return Err(Error::Input(format!("affine rows need {} entries", family.rank + 1)));
                }
                let coeffs: Vec<(Rat, Vec<Rat>)> = rows.into_iter().map(|r| (r[0].clone(), r[1..].to_vec())).collect();
                Lifting::affine(family, &coeffs).map(Some)
            }
        }
    }

    /// The seed in the file, else the command-line seed.
    pub fn seed(&self, fallback: u64) -> u64 {
        self.lifting.seed.unwrap_or(fallback)
    }

    /// The explicit translation, or `None` for `"auto"`.
    pub fn delta(&self) -> Result<Option<Vec<Rat>>> {
        match &self.delta {
            DeltaJson::Auto(s) if s == "auto" => Ok(None),
            DeltaJson::Auto(s) => Err(Error::Input(format!("delta must be \"auto\" or a list, not {s:?}"))),
            DeltaJson::Values(v) => {
                if v.len() != self.rank {
                    return Err(Error::Input(format!("delta needs {} coordinates", self.rank)));
                }
                v.iter().map(RatJson::parse).collect::<Result<Vec<_>>>().map(Some)
            }
        }
    }
}
