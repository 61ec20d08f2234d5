//! Brute-force Drinfeld center of `Vec_G` with trivial associator.
//!
//! Simples are pairs `(g, χ_a)`; the (unnormalized) S-matrix entry between
//! `(g, a)` and `(h, b)` is `χ_a(h)·χ_b(g)`. The Müger center embeds by
//! `l ↦ (l, β(·, l))`, and restricting to those columns then dropping
//! repeated rows yields the 2-categorical S̃-matrix.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::forms::Bicharacter;
use crate::groups::{FiniteAbelianGroup, GroupElement};
use crate::rational::Rational;
use crate::roots::{Label, LabeledUnityMatrix, UnityScalar};

/// Largest `|G|` the center route accepts (`|G|²` simples).
pub const ORACLE_MAX_GROUP_SIZE: usize = 64;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CenterSimple {
    pub grade: GroupElement,
    /// Index `a` of the half-braiding character `δ_h ↦ χ_a(h)`.
    pub half_braiding: GroupElement,
}

impl CenterSimple {
    pub fn label(&self) -> Label {
        Label::CenterSimple {
            grade: self.grade.clone(),
            character: self.half_braiding.clone(),
        }
    }
}

fn check_oracle_size(group: &FiniteAbelianGroup) -> Result<()> {
    if group.size() > ORACLE_MAX_GROUP_SIZE {
        return Err(Error::Size {
            size: group.size() as u128,
            cap: ORACLE_MAX_GROUP_SIZE,
        });
    }
    Ok(())
}

/// All `|G|²` simples, grade-major. Every half-braiding is checked to be
/// multiplicative on `δ_h ⊗ δ_h'`.
pub fn center_simples(group: &FiniteAbelianGroup) -> Result<Vec<CenterSimple>> {
    check_oracle_size(group)?;
    let elements = group.elements();
    for a in &elements {
        for (i, h) in elements.iter().enumerate() {
            for (j, h2) in elements.iter().enumerate() {
                let sum = group.element_at(group.add_index(i, j));
                if group.pairing(a, &sum) != group.pairing(a, h) * group.pairing(a, h2) {
                    return Err(Error::InvariantViolation(format!(
                        "half-braiding χ{a} not multiplicative at {h}, {h2}"
                    )));
                }
            }
        }
    }
    Ok(elements
        .iter()
        .flat_map(|g| {
            elements.iter().map(move |a| CenterSimple {
                grade: g.clone(),
                half_braiding: a.clone(),
            })
        })
        .collect())
}

/// The S-matrix of the center, evaluated on demand. Use [`to_matrix`]
/// to materialize all `|G|⁴` entries.
///
/// [`to_matrix`]: CenterSMatrix::to_matrix
#[derive(Clone, Debug)]
pub struct CenterSMatrix {
    group: FiniteAbelianGroup,
    simples: Vec<CenterSimple>,
}

pub fn center_s_matrix(group: &FiniteAbelianGroup) -> Result<CenterSMatrix> {
    Ok(CenterSMatrix {
        group: group.clone(),
        simples: center_simples(group)?,
    })
}

impl CenterSMatrix {
    pub fn group(&self) -> &FiniteAbelianGroup {
        &self.group
    }

    pub fn simples(&self) -> &[CenterSimple] {
        &self.simples
    }

    pub fn dim(&self) -> usize {
        self.simples.len()
    }

    /// Position of a simple; simples are laid out as `grade_index·|G| + a_index`.
    pub fn position(&self, s: &CenterSimple) -> Option<usize> {
        (self.group.contains(&s.grade) && self.group.contains(&s.half_braiding)).then(|| {
            self.group.index_of(&s.grade) * self.group.size() + self.group.index_of(&s.half_braiding)
        })
    }

    pub fn entry_of(&self, z: &CenterSimple, t: &CenterSimple) -> UnityScalar {
        self.group.pairing(&z.half_braiding, &t.grade) * self.group.pairing(&t.half_braiding, &z.grade)
    }

    pub fn entry(&self, i: usize, j: usize) -> UnityScalar {
        self.entry_of(&self.simples[i], &self.simples[j])
    }

    pub fn to_matrix(&self) -> LabeledUnityMatrix {
        let labels: Vec<Label> = self.simples.iter().map(CenterSimple::label).collect();
        LabeledUnityMatrix::from_fn(labels.clone(), labels, |i, j| self.entry(i, j))
            .expect("center simples are distinct")
    }
}

/// Embeds the Müger-center simple `l` as `(l, χ_{a_l})` with
/// `χ_{a_l}(h) = β(h, l)`.
pub fn embed_muger(l: &GroupElement, beta: &Bicharacter) -> Result<CenterSimple> {
    let group = beta.group();
    group.check(l)?;
    let generators = group.generators();
    let central = generators
        .iter()
        .all(|e| (beta.eval_unchecked(e, l) * beta.eval_unchecked(l, e)).is_one());
    if !central {
        return Err(Error::Input(format!("{l} is not in the Müger center")));
    }
    let coords: Vec<i64> = generators
        .iter()
        .zip(group.orders())
        .map(|(e, &n)| {
            let scaled = beta.eval_unchecked(e, l).exponent() * Rational::from_integer(n as i64);
            debug_assert!(scaled.is_integer());
            scaled.to_integer()
        })
        .collect();
    let a = group.element(&coords)?;
    for h in group.elements() {
        if group.pairing(&a, &h) != beta.eval_unchecked(&h, l) {
            return Err(Error::InvariantViolation(format!(
                "half-braiding of embedded {l} disagrees with β at {h}"
            )));
        }
    }
    Ok(CenterSimple {
        grade: l.clone(),
        half_braiding: a,
    })
}

/// Keeps the columns `cols`, then the first occurrence of each distinct row.
/// The number of surviving rows must equal the number of columns.
pub fn restrict_and_dedup(s: &CenterSMatrix, cols: &[CenterSimple]) -> Result<LabeledUnityMatrix> {
    for c in cols {
        if s.position(c).is_none() {
            return Err(Error::Input(format!("{:?} is not a simple of the center", c)));
        }
    }
    let mut seen: HashSet<Vec<UnityScalar>> = HashSet::new();
    let mut row_labels = Vec::new();
    let mut entries = Vec::new();
    for z in &s.simples {
        let row: Vec<UnityScalar> = cols.iter().map(|t| s.entry_of(z, t)).collect();
        if seen.insert(row.clone()) {
            row_labels.push(z.label());
            entries.push(row);
        }
    }
    if entries.len() != cols.len() {
        return Err(Error::InvariantViolation(format!(
            "{} distinct rows for {} Müger columns",
            entries.len(),
            cols.len()
        )));
    }
    LabeledUnityMatrix::new(row_labels, cols.iter().map(CenterSimple::label).collect(), entries)
}
