//! JSON descriptions of finite-dimensional algebras over `Q(vars)`.
//!
//! ```json
//! {
//!   "name": "Q(t)[x]/(x^2 - t x - 1)",
//!   "basis": ["1", "x"],
//!   "unit": {"1": "1"},
//!   "products": {"x*x": {"1": "1", "x": "t"}},
//!   "generators": ["x"]
//! }
//! ```
//!
//! Products are keyed `"left*right"` and map basis labels to scalar strings.
//! Unlisted products are zero, except that products with a unit basis
//! element may be omitted.  `generators` defaults to the whole basis.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use sepdeform_scalar::{parse_ratfunc, Rat, Ring};

use super::{Algebra, Element};
use crate::error::{CoreError, Result};

/// Largest accepted basis.
pub const MAX_SPEC_DIM: usize = 64;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraSpec {
    #[serde(default)]
    pub name: Option<String>,
    pub basis: Vec<String>,
    pub unit: BTreeMap<String, String>,
    #[serde(default)]
    pub products: BTreeMap<String, BTreeMap<String, String>>,
    #[serde(default)]
    pub generators: Option<Vec<String>>,
}

fn invalid(msg: impl Into<String>) -> CoreError {
    CoreError::InvalidInput(msg.into())
}

impl AlgebraSpec {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| invalid(format!("algebra spec: {e}")))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("spec serializes")
    }

    fn index(&self) -> Result<BTreeMap<&str, usize>> {
        if self.basis.is_empty() || self.basis.len() > MAX_SPEC_DIM {
            return Err(invalid(format!("basis size {} outside 1..={MAX_SPEC_DIM}", self.basis.len())));
        }
        let mut index = BTreeMap::new();
        for (i, b) in self.basis.iter().enumerate() {
            if b.is_empty() || b.contains('*') {
                return Err(invalid(format!("bad basis label {b:?}")));
            }
            if index.insert(b.as_str(), i).is_some() {
                return Err(invalid(format!("basis label {b:?} repeats")));
            }
        }
        Ok(index)
    }

    fn combination(&self, index: &BTreeMap<&str, usize>, terms: &BTreeMap<String, String>) -> Result<Vec<(usize, Rat)>> {
        terms
            .iter()
            .map(|(label, c)| {
                let k = *index.get(label.as_str()).ok_or_else(|| invalid(format!("unknown basis label {label:?}")))?;
                let c = parse_ratfunc::<sepdeform_scalar::Integer>(c).map_err(|e| invalid(format!("scalar {c:?}: {e}")))?;
                Ok((k, c))
            })
            .collect()
    }

    /// The algebra (unit and associativity verified) and its generators.
    pub fn build(&self) -> Result<(Algebra<Rat>, Vec<Element<Rat>>)> {
        let index = self.index()?;
        let d = self.basis.len();
        let unit = self.combination(&index, &self.unit)?;
        let unit_basis = match unit.as_slice() {
            [(k, c)] if c.is_one() => Some(*k),
            _ => None,
        };
        let mut table: Vec<Option<Vec<(usize, Rat)>>> = vec![None; d * d];
        for (key, terms) in &self.products {
            let (l, r) = key.split_once('*').ok_or_else(|| invalid(format!("product key {key:?} is not \"a*b\"")))?;
            let i = *index.get(l.trim()).ok_or_else(|| invalid(format!("unknown basis label {l:?}")))?;
            let j = *index.get(r.trim()).ok_or_else(|| invalid(format!("unknown basis label {r:?}")))?;
            if table[i * d + j].replace(self.combination(&index, terms)?).is_some() {
                return Err(invalid(format!("product {key:?} given twice")));
            }
        }
        if let Some(u) = unit_basis {
            for k in 0..d {
                table[u * d + k].get_or_insert_with(|| vec![(k, Rat::one())]);
                table[k * d + u].get_or_insert_with(|| vec![(k, Rat::one())]);
            }
        }
        let table = table.into_iter().map(Option::unwrap_or_default).collect();
        let name = self.name.clone().unwrap_or_else(|| "A".into());
        let alg = Algebra::new(name, self.basis.clone(), table, unit)?;
        let generators = match &self.generators {
            None => (0..d).map(|i| alg.basis(i)).collect(),
            Some(gens) => gens
                .iter()
                .map(|g| {
                    index
                        .get(g.as_str())
                        .map(|&k| alg.basis(k))
                        .ok_or_else(|| invalid(format!("unknown generator {g:?}")))
                })
                .collect::<Result<_>>()?,
        };
        Ok((alg, generators))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const QUADRATIC: &str = r#"{
        "name": "Q(t)[x]/(x^2 - t x - 1)",
        "basis": ["1", "x"],
        "unit": {"1": "1"},
        "products": {"x*x": {"1": "1", "x": "t"}},
        "generators": ["x"]
    }"#;

    #[test]
    fn quadratic_spec() {
        let spec = AlgebraSpec::from_json(QUADRATIC).unwrap();
        let (alg, gens) = spec.build().unwrap();
        assert_eq!(alg.dim(), 2);
        assert_eq!(gens.len(), 1);
        assert_eq!(gens[0].mul(&gens[0]).unwrap().to_string(), "1 + t*x");
        assert_eq!(AlgebraSpec::from_json(&spec.to_json()).unwrap(), spec);
    }

    #[test]
    fn bad_specs() {
        assert!(AlgebraSpec::from_json("{}").is_err());
        let nonassoc = r#"{"basis": ["1", "x", "y"], "unit": {"1": "1"},
            "products": {"x*y": {"x": "1"}, "y*y": {"y": "1"}, "x*x": {"y": "1"}}}"#;
        assert!(AlgebraSpec::from_json(nonassoc).unwrap().build().is_err());
        let unknown = r#"{"basis": ["1"], "unit": {"z": "1"}}"#;
        assert!(AlgebraSpec::from_json(unknown).unwrap().build().is_err());
    }
}
