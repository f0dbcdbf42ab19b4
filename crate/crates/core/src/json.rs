//! JSON schemas for groups, class functions, sector data, curve data and
//! reports. Rationals are always written as `"p/q"` strings.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::charfun::{CharacterTable, ClassFunction, Decomposition};
use crate::curve::{CurveDatum, GlobalChi, RamifiedOrbit};
use crate::cyclo::rational::{format_rational, parse_rational};
use crate::cyclo::Cyclotomic;
use crate::error::{Error, Result};
use crate::groups::{Perm, PermGroup};
use crate::lrr::{SectorData, SectorEntry};
use crate::oracle::ComparisonReport;

pub fn from_str<T: DeserializeOwned>(s: &str) -> Result<T> {
    serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
}

pub fn to_string_pretty<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("schemas serialize")
}

/// `{"degree": d, "generators": [[images...], ...], "char": p}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupJson {
    pub degree: usize,
    pub generators: Vec<Vec<u32>>,
    #[serde(rename = "char", default)]
    pub characteristic: u32,
}

impl GroupJson {
    pub fn from_group(g: &PermGroup) -> Self {
        GroupJson {
            degree: g.degree(),
            generators: g.generators().iter().map(|p| p.images().to_vec()).collect(),
            characteristic: g.characteristic(),
        }
    }

    pub fn build(&self) -> Result<Arc<PermGroup>> {
        let gens = self
            .generators
            .iter()
            .map(|images| Perm::new(images.clone()))
            .collect::<Result<Vec<_>>>()?;
        PermGroup::enumerate(self.degree, gens, self.characteristic)
    }
}

/// A class function value: a full cyclotomic object, or a rational given
/// as a `"p/q"` string or an integer.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ValueJson {
    Cyclotomic(Cyclotomic),
    Rational(String),
    Integer(i64),
}

impl ValueJson {
    pub fn to_cyclotomic(&self) -> Result<Cyclotomic> {
        match self {
            ValueJson::Cyclotomic(c) => Ok(c.clone()),
            ValueJson::Rational(s) => Ok(Cyclotomic::from_rational(parse_rational(s)?, 1)),
            ValueJson::Integer(k) => Ok(Cyclotomic::from_integer(*k, 1)),
        }
    }
}

fn values_to_cyclotomic(values: &[ValueJson]) -> Result<Vec<Cyclotomic>> {
    values.iter().map(ValueJson::to_cyclotomic).collect()
}

fn values_to_json(f: &ClassFunction) -> Vec<ValueJson> {
    f.values().iter().cloned().map(ValueJson::Cyclotomic).collect()
}

/// `{"group": ..., "char": p, "values": [...]}` in class order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassFunctionJson {
    pub group: GroupJson,
    #[serde(rename = "char", default, skip_serializing_if = "Option::is_none")]
    pub characteristic: Option<u32>,
    pub values: Vec<ValueJson>,
}

/// Builds the group of a JSON document, with an optional `char` overriding
/// the group's own.
fn group_with_char(group: &GroupJson, characteristic: Option<u32>) -> Result<Arc<PermGroup>> {
    let mut spec = group.clone();
    if let Some(p) = characteristic {
        spec.characteristic = p;
    }
    spec.build()
}

impl ClassFunctionJson {
    pub fn from_class_function(f: &ClassFunction) -> Self {
        ClassFunctionJson {
            group: GroupJson::from_group(f.group()),
            characteristic: Some(f.characteristic()),
            values: values_to_json(f),
        }
    }

    pub fn build(&self) -> Result<ClassFunction> {
        let group = group_with_char(&self.group, self.characteristic)?;
        self.build_on(group)
    }

    /// The class function on an already constructed copy of its group.
    pub fn build_on(&self, group: Arc<PermGroup>) -> Result<ClassFunction> {
        ClassFunction::new(group, values_to_cyclotomic(&self.values)?)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SectorJson {
    pub sigma: usize,
    pub order: usize,
    /// Element index of the marked generator; defaults to the class
    /// representative.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub generator: Option<usize>,
    pub q: BTreeMap<String, String>,
}

/// `{"group": ..., "sectors": [{"sigma": id, "order": r, "q": {"0": "p/q"}}]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SectorDataJson {
    pub group: GroupJson,
    #[serde(rename = "char", default, skip_serializing_if = "Option::is_none")]
    pub characteristic: Option<u32>,
    pub sectors: Vec<SectorJson>,
}

impl SectorDataJson {
    pub fn from_sector_data(data: &SectorData) -> Self {
        let sectors = data
            .sectors()
            .iter()
            .map(|s| SectorJson {
                sigma: s.sigma.id,
                order: s.order(),
                generator: (s.generator != s.sigma.generator).then_some(s.generator),
                q: s.q
                    .iter()
                    .enumerate()
                    .map(|(i, v)| (i.to_string(), format_rational(v)))
                    .collect(),
            })
            .collect();
        SectorDataJson {
            group: GroupJson::from_group(data.group()),
            characteristic: Some(data.group().characteristic()),
            sectors,
        }
    }

    pub fn build(&self) -> Result<SectorData> {
        let group = group_with_char(&self.group, self.characteristic)?;
        let classes = group.cyclic_subgroup_classes();
        let entries = self
            .sectors
            .iter()
            .map(|s| {
                let expected = classes
                    .get(s.sigma)
                    .ok_or_else(|| Error::MalformedSectors(format!("unknown sector {}", s.sigma)))?
                    .order;
                if expected != s.order {
                    return Err(Error::MalformedSectors(format!(
                        "sector {} has order {expected}, not {}",
                        s.sigma, s.order
                    )));
                }
                let q =
                    s.q.iter()
                        .map(|(k, v)| {
                            let i = k
                                .parse::<usize>()
                                .map_err(|_| Error::MalformedSectors(format!("bad index {k:?}")))?;
                            Ok((i, parse_rational(v)?))
                        })
                        .collect::<Result<BTreeMap<_, _>>>()?;
                Ok(SectorEntry {
                    sigma: s.sigma,
                    generator: s.generator,
                    q,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        SectorData::new(group, entries)
    }
}

/// Values of a character of an orbit stabilizer, in the stabilizer's class
/// order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LocalCharJson {
    pub values: Vec<ValueJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitJson {
    /// Element indices (in the group's enumeration) generating `G_x`.
    pub stabilizer: Vec<usize>,
    pub e: usize,
    pub et: usize,
    pub fiber: LocalCharJson,
    pub conormal: LocalCharJson,
}

/// `{"group", "char", "rank", "mode": "direct"|"hrr", "chi" | "deg"/"gY",
/// "orbits"}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurveDatumJson {
    pub group: GroupJson,
    #[serde(rename = "char", default, skip_serializing_if = "Option::is_none")]
    pub characteristic: Option<u32>,
    pub rank: u32,
    pub mode: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub chi: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub deg: Option<i64>,
    #[serde(rename = "gY", default, skip_serializing_if = "Option::is_none")]
    pub g_y: Option<u64>,
    pub orbits: Vec<OrbitJson>,
}

impl CurveDatumJson {
    pub fn from_datum(datum: &CurveDatum) -> Self {
        let (mode, chi, deg, g_y) = match datum.chi_source() {
            GlobalChi::Direct(q) => ("direct", Some(format_rational(q)), None, None),
            GlobalChi::Hrr { degree, genus_quotient } => ("hrr", None, Some(*degree), Some(*genus_quotient)),
        };
        let orbits = datum
            .orbits()
            .iter()
            .map(|o| OrbitJson {
                stabilizer: o
                    .stabilizer()
                    .sub
                    .generator_indices()
                    .iter()
                    .map(|&g| o.stabilizer().map[g])
                    .collect(),
                e: o.e(),
                et: o.e_t(),
                fiber: LocalCharJson {
                    values: values_to_json(o.fiber()),
                },
                conormal: LocalCharJson {
                    values: values_to_json(o.conormal()),
                },
            })
            .collect();
        CurveDatumJson {
            group: GroupJson::from_group(datum.group()),
            characteristic: Some(datum.characteristic()),
            rank: datum.rank(),
            mode: mode.into(),
            chi,
            deg,
            g_y,
            orbits,
        }
    }

    pub fn build(&self) -> Result<CurveDatum> {
        let group = group_with_char(&self.group, self.characteristic)?;
        let chi = match self.mode.as_str() {
            "direct" => {
                let chi = self
                    .chi
                    .as_ref()
                    .ok_or_else(|| Error::Parse("direct mode needs \"chi\"".into()))?;
                GlobalChi::Direct(parse_rational(chi)?)
            }
            "hrr" => GlobalChi::Hrr {
                degree: self.deg.ok_or_else(|| Error::Parse("hrr mode needs \"deg\"".into()))?,
                genus_quotient: self.g_y.ok_or_else(|| Error::Parse("hrr mode needs \"gY\"".into()))?,
            },
            other => return Err(Error::Parse(format!("unknown mode {other:?}"))),
        };
        let orbits = self
            .orbits
            .iter()
            .map(|o| {
                if let Some(&bad) = o.stabilizer.iter().find(|&&g| g >= group.order()) {
                    return Err(Error::InvalidOrbit(format!("element index {bad} out of range")));
                }
                let stabilizer = group.subgroup_generated_by(&o.stabilizer)?;
                let sub = stabilizer.sub.clone();
                let fiber = ClassFunction::new(sub.clone(), values_to_cyclotomic(&o.fiber.values)?)
                    .map_err(|e| Error::InvalidOrbit(format!("fiber: {e}")))?;
                let conormal = ClassFunction::new(sub, values_to_cyclotomic(&o.conormal.values)?)
                    .map_err(|e| Error::InvalidOrbit(format!("conormal: {e}")))?;
                RamifiedOrbit::new(stabilizer, o.e, o.et, fiber, conormal)
            })
            .collect::<Result<Vec<_>>>()?;
        CurveDatum::new(group, self.rank, chi, orbits)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionJson {
    pub multiplicities: Vec<String>,
    pub integral: bool,
}

impl DecompositionJson {
    pub fn from_decomposition(d: &Decomposition) -> Self {
        DecompositionJson {
            multiplicities: d.multiplicities.iter().map(format_rational).collect(),
            integral: d.integral,
        }
    }
}

/// `{"group": spec, "d": d, "equal": bool, "lhs", "rhs", "diff", ...}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportJson {
    pub group: String,
    pub d: i64,
    pub equal: bool,
    pub lhs: ClassFunctionJson,
    pub rhs: ClassFunctionJson,
    pub diff: ClassFunctionJson,
    pub sector_route_equal: bool,
    pub orbit_checks: bool,
    pub hrr_equal: bool,
    pub bookkeeping: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub decomposition: Option<DecompositionJson>,
}

impl ReportJson {
    pub fn from_report(r: &ComparisonReport) -> Self {
        ReportJson {
            group: r.spec.clone(),
            d: r.d,
            equal: r.equal,
            lhs: ClassFunctionJson::from_class_function(&r.lhs),
            rhs: ClassFunctionJson::from_class_function(&r.rhs),
            diff: ClassFunctionJson::from_class_function(&r.diff),
            sector_route_equal: r.sector_route_equal,
            orbit_checks: r.orbit_checks,
            hrr_equal: r.hrr_equal,
            bookkeeping: r.bookkeeping,
            decomposition: r.decomposition.as_ref().map(DecompositionJson::from_decomposition),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassJson {
    pub representative: Vec<u32>,
    pub size: usize,
    pub order: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CyclicSubgroupJson {
    pub id: usize,
    pub generator: Vec<u32>,
    pub order: usize,
    pub centralizer_order: usize,
    pub normalizer_order: usize,
}

/// Classes, sectors and (optionally) irreducible characters of a group.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableJson {
    pub group: GroupJson,
    pub order: usize,
    pub classes: Vec<ClassJson>,
    pub cyclic_subgroups: Vec<CyclicSubgroupJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub irreducibles: Option<Vec<Vec<Cyclotomic>>>,
}

impl TableJson {
    pub fn new(g: &PermGroup, table: Option<&CharacterTable>) -> Self {
        TableJson {
            group: GroupJson::from_group(g),
            order: g.order(),
            classes: g
                .conjugacy_classes(true)
                .into_iter()
                .map(|c| ClassJson {
                    representative: c.representative_perm.images().to_vec(),
                    size: c.size,
                    order: c.order,
                })
                .collect(),
            cyclic_subgroups: g
                .cyclic_subgroup_classes()
                .into_iter()
                .map(|s| CyclicSubgroupJson {
                    id: s.id,
                    generator: s.generator_perm.images().to_vec(),
                    order: s.order,
                    centralizer_order: s.centralizer_order,
                    normalizer_order: s.normalizer_order,
                })
                .collect(),
            irreducibles: table.map(|t| t.rows().iter().map(|r| r.values().to_vec()).collect()),
        }
    }
}
