//! Text parsing and JSON schemas. Everything user-facing uses 1-based
//! Bourbaki indices; the library itself is 0-based.

use std::str::FromStr;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::chow::SchubertVector;
use crate::cluster::{Layer, Trace};
use crate::error::{Error, Result};
use crate::halldist::Distribution;
use crate::index_set::IndexSet;
use crate::multipath::Multipath;
use crate::rootsys::{Root, RootSystem};

/// Parses a comma-separated multiplicity vector such as `"2,1"`.
pub fn parse_multiplicities(rs: &RootSystem, text: &str) -> Result<Vec<u32>> {
    let n = text
        .split(',')
        .map(|tok| {
            tok.trim()
                .parse::<u32>()
                .map_err(|_| Error::Parse(format!("bad multiplicity `{}`", tok.trim())))
        })
        .collect::<Result<Vec<_>>>()?;
    if n.len() != rs.rank() {
        return Err(Error::Parse(format!(
            "expected {} multiplicities, got {}",
            rs.rank(),
            n.len()
        )));
    }
    Ok(n)
}

/// Parses a comma-separated list of 1-based indices such as `"1,3"`.
pub fn parse_index_set(rs: &RootSystem, text: &str) -> Result<IndexSet> {
    text.split(',')
        .map(|tok| parse_index(rs, tok.trim()))
        .collect()
}

/// Parses one 1-based index into a 0-based one.
pub fn parse_index(rs: &RootSystem, text: &str) -> Result<usize> {
    let k: usize = text
        .parse()
        .map_err(|_| Error::Parse(format!("bad index `{text}`")))?;
    if k == 0 || k > rs.rank() {
        return Err(Error::Parse(format!(
            "index {k} out of range 1..={}",
            rs.rank()
        )));
    }
    Ok(k - 1)
}

fn one_based(set: IndexSet) -> Vec<usize> {
    set.iter().map(|i| i + 1).collect()
}

fn from_one_based(rs: &RootSystem, indices: &[usize]) -> Result<IndexSet> {
    indices
        .iter()
        .map(|&k| parse_index(rs, &k.to_string()))
        .collect()
}

fn root_from_json(rs: &RootSystem, coeffs: &[i32]) -> Result<Root> {
    let root = Root::new(coeffs);
    rs.check_positive_root(&root)?;
    Ok(root)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub word: String,
    pub coeff: serde_json::Number,
}

/// `{degree, terms: [{word, coeff}]}`, terms in element order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SchubertVectorJson {
    pub degree: usize,
    pub terms: Vec<TermJson>,
}

impl SchubertVectorJson {
    pub fn from_vector(rs: &RootSystem, v: &SchubertVector) -> Self {
        SchubertVectorJson {
            degree: v.degree(),
            terms: v
                .terms()
                .map(|(w, c)| TermJson {
                    word: rs.format_word(w),
                    coeff: big_to_number(c),
                })
                .collect(),
        }
    }

    pub fn to_vector(&self, rs: &RootSystem) -> Result<SchubertVector> {
        let mut v = SchubertVector::zero(self.degree);
        for term in &self.terms {
            let w = rs.parse_word(&term.word)?;
            let c = BigUint::from_str(&term.coeff.to_string())
                .map_err(|_| Error::Parse(format!("bad coefficient {}", term.coeff)))?;
            v.add_term(w, c)?;
        }
        Ok(v)
    }
}

pub fn big_to_number(c: &BigUint) -> serde_json::Number {
    serde_json::Number::from_str(&c.to_string()).expect("decimal digits form a JSON number")
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LayerJson {
    #[serde(rename = "I")]
    pub indices: Vec<usize>,
    pub roots: Vec<Vec<i32>>,
    pub k: Vec<u32>,
}

/// Ordered peeling layers.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceJson {
    pub layers: Vec<LayerJson>,
}

impl TraceJson {
    pub fn from_trace(trace: &Trace) -> Self {
        TraceJson {
            layers: trace
                .layers
                .iter()
                .map(|l| LayerJson {
                    indices: one_based(l.indices),
                    roots: l.roots.iter().map(|r| r.coeffs().to_vec()).collect(),
                    k: l.k.clone(),
                })
                .collect(),
        }
    }

    pub fn to_trace(&self, rs: &RootSystem) -> Result<Trace> {
        let layers = self
            .layers
            .iter()
            .map(|l| {
                Ok(Layer {
                    indices: from_one_based(rs, &l.indices)?,
                    roots: l
                        .roots
                        .iter()
                        .map(|c| root_from_json(rs, c))
                        .collect::<Result<_>>()?,
                    k: l.k.clone(),
                })
            })
            .collect::<Result<_>>()?;
        Ok(Trace { layers })
    }
}

/// A multipath as a list of 1-based vertex lists.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct MultipathJson(pub Vec<Vec<usize>>);

impl MultipathJson {
    pub fn from_multipath(mp: &Multipath) -> Self {
        MultipathJson(
            mp.paths
                .iter()
                .map(|p| p.iter().map(|i| i + 1).collect())
                .collect(),
        )
    }

    pub fn to_multipath(&self, rs: &RootSystem) -> Result<Multipath> {
        let paths = self
            .0
            .iter()
            .map(|p| {
                p.iter()
                    .map(|&k| parse_index(rs, &k.to_string()))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<_>>()?;
        Ok(Multipath::new(paths))
    }
}

/// A distribution as `[root coefficients, 1-based index]` pairs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct DistributionJson(pub Vec<(Vec<i32>, usize)>);

impl DistributionJson {
    pub fn from_distribution(f: &Distribution) -> Self {
        DistributionJson(f.iter().map(|(r, i)| (r.coeffs().to_vec(), i + 1)).collect())
    }

    pub fn to_distribution(&self, rs: &RootSystem) -> Result<Distribution> {
        let assignment = self
            .0
            .iter()
            .map(|(c, k)| Ok((root_from_json(rs, c)?, parse_index(rs, &k.to_string())?)))
            .collect::<Result<_>>()?;
        Distribution::new(assignment)
    }
}

/// Output of `coeff`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoeffJson {
    pub root_system: String,
    pub word: String,
    pub n: Vec<u32>,
    pub coeff: serde_json::Number,
}

/// Output of `classify`: `verdict` is `UNIT` or `NON_UNIT`, `value` the
/// coefficient, `trace` the peeling for a unit.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassifyJson {
    pub root_system: String,
    pub word: String,
    pub n: Vec<u32>,
    pub verdict: String,
    pub value: serde_json::Number,
    pub trace: Option<TraceJson>,
}

/// Output of `mf-check`; `witness` is a reduced word of some `w` with
/// coefficient one.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MfCheckJson {
    pub root_system: String,
    pub n: Vec<u32>,
    pub multiplicity_free: bool,
    pub witness: Option<String>,
}

/// Output of `max-degree`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MaxDegreeJson {
    pub root_system: String,
    pub involved: Vec<usize>,
    pub max_degree: usize,
    pub multipath: MultipathJson,
}

/// Output of `single-divisor`. With a word, `multiplicity_free` tells whether
/// `D_i^{ℓ(w)}` has coefficient one at `w`, and `sequence` gives the
/// path-originating inversion sequence in that case.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SingleDivisorJson {
    pub root_system: String,
    pub index: usize,
    pub max_power: usize,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub word: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub multiplicity_free: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub sequence: Option<Vec<Vec<i32>>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteReportJson {
    pub suite: String,
    pub checked: u64,
    pub failures: u64,
    pub first_failure: Option<String>,
}

/// Output of `verify`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyJson {
    pub root_system: String,
    pub reports: Vec<SuiteReportJson>,
}

pub fn one_based_indices(set: IndexSet) -> Vec<usize> {
    one_based(set)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chow::expand_monomial;
    use crate::rootsys::Kind;

    #[test]
    fn parsers() {
        let rs = RootSystem::build(Kind::A, 3).unwrap();
        assert_eq!(parse_multiplicities(&rs, "2, 1,0").unwrap(), vec![2, 1, 0]);
        assert!(parse_multiplicities(&rs, "2,1").is_err());
        assert!(parse_multiplicities(&rs, "2,x,1").is_err());
        let s = parse_index_set(&rs, "1,3").unwrap();
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![0, 2]);
        assert!(parse_index_set(&rs, "0").is_err());
        assert!(parse_index(&rs, "4").is_err());
    }

    #[test]
    fn vector_schema_round_trips() {
        let rs = RootSystem::build(Kind::A, 2).unwrap();
        let v = expand_monomial(&rs, &[1, 1]).unwrap();
        let json = SchubertVectorJson::from_vector(&rs, &v);
        let text = serde_json::to_string(&json).unwrap();
        let back: SchubertVectorJson = serde_json::from_str(&text).unwrap();
        assert_eq!(back.to_vector(&rs).unwrap(), v);
        assert_eq!(
            text,
            r#"{"degree":2,"terms":[{"word":"2 1","coeff":1},{"word":"1 2","coeff":1}]}"#
        );
    }

    #[test]
    fn big_coefficients_survive() {
        let c = BigUint::from(u64::MAX) * BigUint::from(u64::MAX);
        let n = big_to_number(&c);
        let text = serde_json::to_string(&n).unwrap();
        assert_eq!(text, c.to_string());
    }
}
