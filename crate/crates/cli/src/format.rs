//! JSON file formats.
//!
//! A number in `Q(ζ_m)` is written `{"order": m, "terms": [[k, "p/q"], ...]}`
//! meaning `Σ (p/q) ζ_m^k`; on input a bare integer or rational string such
//! as `"-3/4"` is accepted too. A grading is `{"group": [n1, ...], "bichar": [[...]]}`,
//! where the optional matrix defaults to the identity (the anyonic braiding
//! on a cyclic group), or a raw `"table"` of values for every pair of group
//! elements. Algebra specs list basis names and degrees plus sparse `eps`,
//! `d` and `c` entries; indices are 0-based positions or basis names.

use std::collections::BTreeMap;

use anyonic_core::constructions::AnsatzParams;
use anyonic_core::graded::BicharacterReport;
use anyonic_core::lie_axioms::{AxiomCheck, AxiomReport};
use anyonic_core::{AlgebraSpec, BasisElement, Bicharacter, CycNum, Degree, GradingGroup, Rational};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("{0}")]
    Json(#[from] serde_json::Error),
    #[error("{path}: {message}")]
    Invalid { path: String, message: String },
}

fn invalid(path: impl Into<String>, message: impl ToString) -> FormatError {
    FormatError::Invalid {
        path: path.into(),
        message: message.to_string(),
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum RationalWire {
    Int(i64),
    Str(String),
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum CycWire {
    Int(i64),
    Str(String),
    Full { order: u32, terms: Vec<(i64, RationalWire)> },
}

fn parse_rational(w: &RationalWire, path: &str) -> Result<Rational, FormatError> {
    match w {
        RationalWire::Int(i) => Ok(Rational::from_integer((*i).into())),
        RationalWire::Str(s) => s
            .trim()
            .parse::<Rational>()
            .map_err(|_| invalid(path, format!("not a rational: {s:?}"))),
    }
}

pub fn cyc_from_wire(w: &CycWire, path: &str) -> Result<CycNum, FormatError> {
    match w {
        CycWire::Int(i) => Ok(CycNum::from_integer(*i)),
        CycWire::Str(s) => parse_rational(&RationalWire::Str(s.clone()), path).map(CycNum::from_rational),
        CycWire::Full { order, terms } => {
            let mut parsed = Vec::with_capacity(terms.len());
            for (i, (k, r)) in terms.iter().enumerate() {
                parsed.push((*k, parse_rational(r, &format!("{path}.terms[{i}]"))?));
            }
            CycNum::from_terms(*order, parsed).map_err(|e| invalid(path, e))
        }
    }
}

/// Always the full `{"order", "terms"}` form, with rational strings.
pub fn cyc_to_wire(c: &CycNum) -> CycWire {
    if let Some(r) = c.as_rational() {
        let terms = if c.is_zero() {
            Vec::new()
        } else {
            vec![(0, RationalWire::Str(r.to_string()))]
        };
        return CycWire::Full { order: 1, terms };
    }
    CycWire::Full {
        order: c.order(),
        terms: c
            .terms()
            .map(|(k, r)| (k as i64, RationalWire::Str(r.to_string())))
            .collect(),
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TableEntry {
    pub g: Vec<i64>,
    pub h: Vec<i64>,
    pub val: CycWire,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GradingWire {
    pub group: Vec<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bichar: Option<Vec<Vec<i64>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub table: Option<Vec<TableEntry>>,
}

/// Parses a grading. Raw tables must pass the bicharacter laws.
pub fn grading_from_wire(w: &GradingWire, path: &str) -> Result<Bicharacter, FormatError> {
    let group = GradingGroup::new(w.group.clone()).map_err(|e| invalid(format!("{path}.group"), e))?;
    match (&w.bichar, &w.table) {
        (Some(_), Some(_)) => Err(invalid(path, "give either \"bichar\" or \"table\", not both")),
        (None, Some(table)) => {
            let mut values = BTreeMap::new();
            for (i, e) in table.iter().enumerate() {
                let p = format!("{path}.table[{i}]");
                let g = group.degree(&e.g).map_err(|err| invalid(format!("{p}.g"), err))?;
                let h = group.degree(&e.h).map_err(|err| invalid(format!("{p}.h"), err))?;
                values.insert((g, h), cyc_from_wire(&e.val, &format!("{p}.val"))?);
            }
            let b = Bicharacter::from_table(group, values).map_err(|e| invalid(format!("{path}.table"), e))?;
            if let BicharacterReport::Fail(w) = b.validate() {
                return Err(invalid(
                    format!("{path}.table"),
                    format!("not a bicharacter: {:?} fails at g={}, h={}", w.law, w.g, w.h),
                ));
            }
            Ok(b)
        }
        (matrix, None) => {
            let k = group.rank();
            let matrix = matrix.clone().unwrap_or_else(|| {
                (0..k).map(|i| (0..k).map(|j| i64::from(i == j)).collect()).collect()
            });
            Bicharacter::from_matrix(group, matrix).map_err(|e| invalid(format!("{path}.bichar"), e))
        }
    }
}

pub fn grading_to_wire(b: &Bicharacter) -> GradingWire {
    let group = b.group().factors().to_vec();
    match b.matrix() {
        Some(m) => GradingWire {
            group,
            bichar: Some(m.to_vec()),
            table: None,
        },
        None => GradingWire {
            group,
            bichar: None,
            table: Some(
                b.to_table()
                    .into_iter()
                    .map(|((g, h), v)| TableEntry {
                        g: g.coords().iter().map(|&x| i64::from(x)).collect(),
                        h: h.coords().iter().map(|&x| i64::from(x)).collect(),
                        val: cyc_to_wire(&v),
                    })
                    .collect(),
            ),
        },
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum IndexWire {
    Pos(usize),
    Name(String),
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BasisWire {
    pub name: String,
    pub degree: Vec<i64>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EpsWire {
    pub mu: IndexWire,
    pub val: CycWire,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TripleWire {
    pub mu: IndexWire,
    pub nu: IndexWire,
    pub rho: IndexWire,
    pub val: CycWire,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpecWire {
    pub grading: GradingWire,
    pub basis: Vec<BasisWire>,
    #[serde(default)]
    pub eps: Vec<EpsWire>,
    #[serde(default)]
    pub d: Vec<TripleWire>,
    #[serde(default)]
    pub c: Vec<TripleWire>,
}

fn resolve(idx: &IndexWire, names: &[String], path: &str) -> Result<usize, FormatError> {
    match idx {
        IndexWire::Pos(i) if *i < names.len() => Ok(*i),
        IndexWire::Pos(i) => Err(invalid(path, format!("index {i} out of range for dimension {}", names.len()))),
        IndexWire::Name(n) => names
            .iter()
            .position(|x| x == n)
            .ok_or_else(|| invalid(path, format!("unknown basis name {n:?}"))),
    }
}

type Entries = Vec<((usize, usize, usize), CycNum)>;

fn triples(list: &[TripleWire], names: &[String], path: &str) -> Result<Entries, FormatError> {
    let mut out = Vec::with_capacity(list.len());
    for (i, t) in list.iter().enumerate() {
        let p = format!("{path}[{i}]");
        out.push((
            (
                resolve(&t.mu, names, &format!("{p}.mu"))?,
                resolve(&t.nu, names, &format!("{p}.nu"))?,
                resolve(&t.rho, names, &format!("{p}.rho"))?,
            ),
            cyc_from_wire(&t.val, &format!("{p}.val"))?,
        ));
    }
    Ok(out)
}

fn basis_from_wire(list: &[BasisWire], group: &GradingGroup) -> Result<Vec<BasisElement>, FormatError> {
    list.iter()
        .enumerate()
        .map(|(i, b)| {
            Ok(BasisElement {
                name: b.name.clone(),
                degree: group
                    .degree(&b.degree)
                    .map_err(|e| invalid(format!("basis[{i}].degree"), e))?,
            })
        })
        .collect()
}

pub fn spec_from_wire(w: &SpecWire) -> Result<AlgebraSpec, FormatError> {
    let grading = grading_from_wire(&w.grading, "grading")?;
    let basis = basis_from_wire(&w.basis, grading.group())?;
    let names: Vec<String> = w.basis.iter().map(|b| b.name.clone()).collect();
    let mut eps = Vec::with_capacity(w.eps.len());
    for (i, e) in w.eps.iter().enumerate() {
        let p = format!("eps[{i}]");
        eps.push((
            resolve(&e.mu, &names, &format!("{p}.mu"))?,
            cyc_from_wire(&e.val, &format!("{p}.val"))?,
        ));
    }
    let d = triples(&w.d, &names, "d")?;
    let c = triples(&w.c, &names, "c")?;
    AlgebraSpec::new(grading, basis, eps, d, c).map_err(|e| invalid("spec", e))
}

fn degree_wire(d: &Degree) -> Vec<i64> {
    d.coords().iter().map(|&x| i64::from(x)).collect()
}

pub fn spec_to_wire(a: &AlgebraSpec) -> SpecWire {
    let triple = |((mu, nu, rho), v): (&(usize, usize, usize), &CycNum)| TripleWire {
        mu: IndexWire::Pos(*mu),
        nu: IndexWire::Pos(*nu),
        rho: IndexWire::Pos(*rho),
        val: cyc_to_wire(v),
    };
    SpecWire {
        grading: grading_to_wire(a.grading()),
        basis: a
            .basis()
            .iter()
            .map(|b| BasisWire {
                name: b.name.clone(),
                degree: degree_wire(&b.degree),
            })
            .collect(),
        eps: a
            .eps()
            .iter()
            .map(|(mu, v)| EpsWire {
                mu: IndexWire::Pos(*mu),
                val: cyc_to_wire(v),
            })
            .collect(),
        d: a.d().iter().map(triple).collect(),
        c: a.c().iter().map(triple).collect(),
    }
}

pub fn parse_spec(text: &str) -> Result<AlgebraSpec, FormatError> {
    let wire: SpecWire = serde_json::from_str(text)?;
    spec_from_wire(&wire)
}

pub fn spec_to_json(a: &AlgebraSpec) -> String {
    serde_json::to_string_pretty(&spec_to_wire(a)).expect("spec serializes")
}

/// Lie algebra `g` for the central-extension ansatz: basis and brackets,
/// with an optional grading overriding the command line.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GWire {
    #[serde(default)]
    pub grading: Option<GradingWire>,
    pub basis: Vec<BasisWire>,
    #[serde(default)]
    pub c: Vec<TripleWire>,
}

pub fn parse_g_file(text: &str, default_grading: Bicharacter) -> Result<AnsatzParams, FormatError> {
    let wire: GWire = serde_json::from_str(text)?;
    let grading = match &wire.grading {
        Some(g) => grading_from_wire(g, "grading")?,
        None => default_grading,
    };
    let basis = basis_from_wire(&wire.basis, grading.group())?;
    let names: Vec<String> = wire.basis.iter().map(|b| b.name.clone()).collect();
    let brackets = triples(&wire.c, &names, "c")?.into_iter().collect();
    AnsatzParams::new(grading, names, basis.into_iter().map(|b| b.degree).collect(), brackets)
        .map_err(|e| invalid("basis", e))
}

fn check_json(c: &AxiomCheck) -> Value {
    json!({
        "axiom": c.axiom.label(),
        "passed": c.passed(),
        "failures": c.failures,
        "witnesses": c.witnesses.iter().map(|w| json!({
            "law": w.law,
            "indices": w.indices,
            "lhs": cyc_to_wire(&w.lhs),
            "rhs": cyc_to_wire(&w.rhs),
        })).collect::<Vec<_>>(),
    })
}

pub fn report_json(r: &AxiomReport) -> Value {
    json!({
        "passed": r.passed(),
        "checks": r.checks.iter().map(check_json).collect::<Vec<_>>(),
        "antisymmetry": r.antisymmetry.as_ref().map(check_json),
        "notes": r.notes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyc_round_trip() {
        for c in [
            CycNum::from_integer(-4),
            CycNum::from_rational(Rational::new(3.into(), 7.into())),
            CycNum::root_of_unity(5, 3).unwrap(),
            CycNum::from_integer(0),
        ] {
            let w = cyc_to_wire(&c);
            let text = serde_json::to_string(&w).unwrap();
            let back: CycWire = serde_json::from_str(&text).unwrap();
            assert_eq!(cyc_from_wire(&back, "x").unwrap(), c);
        }
        let w: CycWire = serde_json::from_str(r#"{"order": 3, "terms": [[0, 1], [2, "1/2"]]}"#).unwrap();
        let v = cyc_from_wire(&w, "x").unwrap();
        let expected = &CycNum::one() + &CycNum::root_of_unity(3, 2).unwrap().scale(&Rational::new(1.into(), 2.into()));
        assert_eq!(v, expected);
        let w: CycWire = serde_json::from_str(r#""x/2""#).unwrap();
        assert!(cyc_from_wire(&w, "val").is_err());
    }

    #[test]
    fn grading_defaults_to_identity_matrix() {
        let w: GradingWire = serde_json::from_str(r#"{"group": [3]}"#).unwrap();
        let b = grading_from_wire(&w, "grading").unwrap();
        assert!(b.is_anyonic());
    }

    #[test]
    fn bad_table_is_rejected() {
        let w: GradingWire = serde_json::from_str(
            r#"{"group": [2], "table": [
                {"g": [0], "h": [0], "val": 1}, {"g": [0], "h": [1], "val": 1},
                {"g": [1], "h": [0], "val": 1}, {"g": [1], "h": [1], "val": 2}]}"#,
        )
        .unwrap();
        assert!(grading_from_wire(&w, "grading").is_err());
    }
}
