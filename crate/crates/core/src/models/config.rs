//! JSON model documents.

use std::collections::BTreeMap;
use std::path::Path;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::{ActionModel, FixedComponent, GroupConstants, GroupKind};
use crate::error::{Error, Result};
use crate::exactalg::{Exponent, GaussianRational, LinearForm, MultiPoly, Rational};

pub(crate) type RationalDoc = [i64; 2];

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ModelDoc {
    rank: usize,
    group: GroupKind,
    constants: ConstantsDoc,
    generators: Vec<String>,
    #[serde(default)]
    positive_roots: Vec<Vec<RationalDoc>>,
    components: Vec<ComponentDoc>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ConstantsDoc {
    n0: i64,
    #[serde(rename = "n0T")]
    n0_t: i64,
    weyl: i64,
    s: i64,
    nplus: i64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    residue_scale: Option<RationalDoc>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ComponentDoc {
    id: Option<String>,
    moment: Option<Vec<RationalDoc>>,
    normal_weights: Option<Vec<Vec<RationalDoc>>>,
    restriction: Option<BTreeMap<String, BTreeMap<String, RationalDoc>>>,
    #[serde(default)]
    strictly_semistable: bool,
    /// Dimension of a projective component; absent for isolated points.
    #[serde(default, skip_serializing_if = "Zero::is_zero")]
    fiber_dim: u32,
}

pub(crate) fn rational_from_doc(r: &RationalDoc, field: &str) -> Result<Rational> {
    if r[1] == 0 {
        return Err(Error::Model(format!("{field}: zero denominator")));
    }
    Ok(Rational::new(BigInt::from(r[0]), BigInt::from(r[1])))
}

pub(crate) fn rational_to_doc(q: &Rational) -> Result<RationalDoc> {
    match (q.numer().to_i64(), q.denom().to_i64()) {
        (Some(n), Some(d)) => Ok([n, d]),
        _ => Err(Error::Model(format!("{q} does not fit the [numerator, denominator] encoding"))),
    }
}

fn form_from_doc(v: &[RationalDoc], field: &str) -> Result<LinearForm> {
    Ok(LinearForm::new(v.iter().map(|r| rational_from_doc(r, field)).collect::<Result<_>>()?))
}

fn form_to_doc(f: &LinearForm) -> Result<Vec<RationalDoc>> {
    f.coeffs().iter().map(rational_to_doc).collect()
}

/// Parses a coefficient map `{"e1,e2,...": [num, den]}` into a polynomial.
pub(crate) fn poly_from_map(map: &BTreeMap<String, RationalDoc>, nvars: usize, field: &str) -> Result<MultiPoly> {
    let mut p = MultiPoly::zero(nvars);
    for (key, val) in map {
        let exps: Exponent = if key.trim().is_empty() && nvars == 0 {
            Exponent::new()
        } else {
            key.split(',')
                .map(|t| t.trim().parse::<u32>())
                .collect::<std::result::Result<_, _>>()
                .map_err(|_| Error::Model(format!("{field}: bad exponent key `{key}`")))?
        };
        if exps.len() != nvars {
            return Err(Error::Model(format!("{field}: exponent key `{key}` should have {nvars} entries")));
        }
        p.add_term(exps, GaussianRational::real(rational_from_doc(val, field)?));
    }
    Ok(p)
}

pub(crate) fn poly_to_map(p: &MultiPoly) -> Result<BTreeMap<String, RationalDoc>> {
    let mut out = BTreeMap::new();
    for (e, c) in p.terms() {
        let re = c
            .as_real()
            .ok_or_else(|| Error::Model("restriction coefficients must be rational".into()))?;
        let key = e.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
        out.insert(key, rational_to_doc(re)?);
    }
    Ok(out)
}

/// Parses and validates a model document.
pub fn load_model(json: &str) -> Result<ActionModel> {
    let doc: ModelDoc = serde_json::from_str(json)?;
    let rank = doc.rank;
    let c = &doc.constants;
    let constants = GroupConstants {
        n0: c.n0,
        n0_t: c.n0_t,
        weyl: c.weyl,
        s: c.s,
        n_plus: c.nplus,
        residue_scale: c.residue_scale.as_ref().map(|r| rational_from_doc(r, "constants.residue_scale")).transpose()?,
    };
    let positive_roots = doc
        .positive_roots
        .iter()
        .enumerate()
        .map(|(i, r)| form_from_doc(r, &format!("positive_roots[{i}]")))
        .collect::<Result<Vec<_>>>()?;
    let mut components = Vec::new();
    for (i, cd) in doc.components.iter().enumerate() {
        let id = cd.id.clone().unwrap_or_else(|| format!("#{i}"));
        let missing = |field: &str| Error::Model(format!("component `{id}`: missing field `{field}`"));
        let moment = form_from_doc(cd.moment.as_ref().ok_or_else(|| missing("moment"))?, &format!("component `{id}`.moment"))?;
        let normal_weights = cd
            .normal_weights
            .as_ref()
            .ok_or_else(|| missing("normal_weights"))?
            .iter()
            .map(|w| form_from_doc(w, &format!("component `{id}`.normal_weights")))
            .collect::<Result<Vec<_>>>()?;
        let rmap = cd.restriction.as_ref().ok_or_else(|| missing("restriction"))?;
        if let Some(g) = rmap.keys().find(|g| !doc.generators.contains(g)) {
            return Err(Error::Model(format!("component `{id}`: restriction names unknown generator `{g}`")));
        }
        let nv = rank + usize::from(cd.fiber_dim > 0);
        let mut restriction = Vec::new();
        for g in &doc.generators {
            let m = rmap
                .get(g)
                .ok_or_else(|| Error::Model(format!("component `{id}`: restriction missing generator `{g}`")))?;
            restriction.push(poly_from_map(m, nv, &format!("component `{id}`.restriction.{g}"))?);
        }
        components.push(FixedComponent {
            id,
            moment,
            normal_weights,
            restriction,
            fiber_dim: cd.fiber_dim,
            strictly_semistable: cd.strictly_semistable,
        });
    }
    ActionModel::new(rank, doc.group, constants, doc.generators, positive_roots, components)
}

pub fn load_model_file(path: impl AsRef<Path>) -> Result<ActionModel> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::InvalidArgument(format!("cannot read {}: {e}", path.display())))?;
    load_model(&text)
}

/// Serializes a model to pretty-printed JSON accepted by [`load_model`].
pub fn dump_model(model: &ActionModel) -> Result<String> {
    let c = &model.constants;
    let doc = ModelDoc {
        rank: model.rank,
        group: model.group,
        constants: ConstantsDoc {
            n0: c.n0,
            n0_t: c.n0_t,
            weyl: c.weyl,
            s: c.s,
            nplus: c.n_plus,
            residue_scale: c.residue_scale.as_ref().map(rational_to_doc).transpose()?,
        },
        generators: model.generators.clone(),
        positive_roots: model.positive_roots.iter().map(form_to_doc).collect::<Result<_>>()?,
        components: model
            .components
            .iter()
            .map(|f| {
                let restriction = model
                    .generators
                    .iter()
                    .zip(&f.restriction)
                    .map(|(g, p)| Ok((g.clone(), poly_to_map(p)?)))
                    .collect::<Result<_>>()?;
                Ok(ComponentDoc {
                    id: Some(f.id.clone()),
                    moment: Some(form_to_doc(&f.moment)?),
                    normal_weights: Some(f.normal_weights.iter().map(form_to_doc).collect::<Result<_>>()?),
                    restriction: Some(restriction),
                    strictly_semistable: f.strictly_semistable,
                    fiber_dim: f.fiber_dim,
                })
            })
            .collect::<Result<_>>()?,
    };
    Ok(serde_json::to_string_pretty(&doc)?)
}
