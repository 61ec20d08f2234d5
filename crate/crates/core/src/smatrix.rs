//! The 2-categorical S̃-matrix by two routes, character tables, and the
//! per-instance certificate comparing them.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::center::{center_s_matrix, embed_muger, restrict_and_dedup};
use crate::error::{Error, Result};
use crate::forms::{Bicharacter, Flavor, QuadraticForm};
use crate::groups::{FiniteAbelianGroup, GroupElement, Subgroup};
use crate::modcats::{schur_classes, sigma_scalar};
use crate::roots::{
    matrices_equal_up_to_perm, orthogonality_defect, Label, LabeledUnityMatrix,
    PermutationWitness, UnityScalar,
};

/// Tolerance for the floating-point orthogonality certificate.
pub const ORTHOGONALITY_TOLERANCE: f64 = 1e-9;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterTable {
    pub group: Subgroup,
    /// Generators of the cyclic decomposition the row labels refer to.
    pub generators: Vec<GroupElement>,
    pub table: LabeledUnityMatrix,
}

/// A decomposition `A = ⟨g_1⟩ ⊕ … ⊕ ⟨g_m⟩` with `ord(g_1) ≥ … ≥ ord(g_m) > 1`,
/// and the coordinates of every member.
struct CyclicDecomposition {
    generators: Vec<usize>,
    orders: Vec<u64>,
    coordinates: BTreeMap<usize, Vec<u64>>,
}

/// Peels off generators of maximal order one at a time, backtracking if a
/// greedy choice cannot be completed to a direct decomposition.
fn decompose(a: &Subgroup) -> Result<CyclicDecomposition> {
    let parent = a.parent();
    let mut members: Vec<(u64, usize)> = a
        .members()
        .iter()
        .map(|m| (parent.order_unchecked(m), parent.index_of(m)))
        .collect();
    members.sort_by(|x, y| y.0.cmp(&x.0).then(x.1.cmp(&y.1)));

    fn peel(
        parent: &FiniteAbelianGroup,
        members: &[(u64, usize)],
        target: usize,
        span: Vec<usize>,
        chosen: &mut Vec<(usize, u64)>,
    ) -> bool {
        if span.len() == target {
            return true;
        }
        let bound = chosen.last().map_or(u64::MAX, |c| c.1);
        for &(order, g) in members {
            if order > bound || order == 1 || span.binary_search(&g).is_ok() {
                continue;
            }
            let grown = adjoin(parent, &span, g);
            if grown.len() as u64 != span.len() as u64 * order {
                continue;
            }
            chosen.push((g, order));
            if peel(parent, members, target, grown, chosen) {
                return true;
            }
            chosen.pop();
        }
        false
    }

    let mut chosen = Vec::new();
    if !peel(parent, &members, a.order(), vec![parent.index_of(&parent.zero())], &mut chosen) {
        return Err(Error::InvariantViolation(
            "no cyclic decomposition found for subgroup".into(),
        ));
    }
    let generators: Vec<usize> = chosen.iter().map(|c| c.0).collect();
    let orders: Vec<u64> = chosen.iter().map(|c| c.1).collect();
    let mut coordinates = BTreeMap::new();
    let mut coords = vec![0u64; generators.len()];
    loop {
        let idx = coords
            .iter()
            .zip(&generators)
            .fold(0usize, |acc, (&c, &g)| {
                (0..c).fold(acc, |acc, _| parent.add_index(acc, g))
            });
        if coordinates.insert(idx, coords.clone()).is_some() {
            return Err(Error::InvariantViolation("cyclic decomposition is not direct".into()));
        }
        if !odometer(&mut coords, &orders) {
            break;
        }
    }
    Ok(CyclicDecomposition {
        generators,
        orders,
        coordinates,
    })
}

fn adjoin(parent: &FiniteAbelianGroup, span: &[usize], g: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut multiple = 0usize;
    loop {
        out.extend(span.iter().map(|&s| parent.add_index(s, multiple)));
        multiple = parent.add_index(multiple, g);
        if multiple == 0 {
            break;
        }
    }
    out.sort_unstable();
    out.dedup();
    out
}

/// Advances a mixed-radix counter (last digit fastest); false on wrap-around.
fn odometer(digits: &mut [u64], radices: &[u64]) -> bool {
    for (d, &r) in digits.iter_mut().zip(radices).rev() {
        *d += 1;
        if *d < r {
            return true;
        }
        *d = 0;
    }
    false
}

/// Character table of a subgroup, computed from its own cyclic
/// decomposition rather than from the ambient dual group.
///
/// Rows are characters in coordinates of that decomposition (lexicographic),
/// columns are the members in element order.
pub fn char_table(a: &Subgroup) -> Result<CharacterTable> {
    let parent = a.parent();
    let dec = decompose(a)?;
    let cols: Vec<Label> = a.members().iter().cloned().map(Label::Element).collect();
    let col_coords: Vec<&Vec<u64>> = a
        .members()
        .iter()
        .map(|m| &dec.coordinates[&parent.index_of(m)])
        .collect();
    let mut rows = Vec::with_capacity(a.order());
    let mut c = vec![0u64; dec.orders.len()];
    loop {
        rows.push(c.clone());
        if !odometer(&mut c, &dec.orders) {
            break;
        }
    }
    let row_labels = rows
        .iter()
        .map(|r| Label::Coordinates(r.iter().map(|&x| x as u32).collect()))
        .collect();
    let table = LabeledUnityMatrix::from_fn(row_labels, cols, |i, j| {
        rows[i]
            .iter()
            .zip(col_coords[j])
            .zip(&dec.orders)
            .map(|((&ci, &xi), &o)| UnityScalar::new((ci * xi % o) as i64, o as i64))
            .product()
    })?;
    let out = CharacterTable {
        group: a.clone(),
        generators: dec.generators.iter().map(|&g| parent.element_at(g)).collect(),
        table,
    };
    out.check()?;
    Ok(out)
}

/// Character table of a whole group.
pub fn char_table_of_group(group: &FiniteAbelianGroup) -> Result<CharacterTable> {
    char_table(&group.whole())
}

impl CharacterTable {
    fn check(&self) -> Result<()> {
        let t = &self.table;
        if t.nrows() != self.group.order() || t.ncols() != self.group.order() {
            return Err(Error::InvariantViolation("character table is not |A|×|A|".into()));
        }
        let ones_row = t.row(0).iter().all(UnityScalar::is_one);
        let ones_col = (0..t.nrows()).all(|i| t.entry(i, 0).is_one());
        if !ones_row || !ones_col {
            return Err(Error::InvariantViolation(
                "character table lacks the trivial row or identity column".into(),
            ));
        }
        let defect = orthogonality_defect(t)?;
        if defect >= ORTHOGONALITY_TOLERANCE {
            return Err(Error::InvariantViolation(format!(
                "character table rows not orthogonal (defect {defect:e})"
            )));
        }
        Ok(())
    }
}

/// S̃ through braided module categories: one row per Schur class, one column
/// per Müger-center element, entry `σ_{δ_e, l}` on the regular representative.
pub fn st_matrix_direct(q: &QuadraticForm) -> Result<LabeledUnityMatrix> {
    let radical = q.muger_center();
    let unit = q.group().zero();
    let classes = schur_classes(q)?;
    let mut row_labels = Vec::with_capacity(classes.len());
    let mut entries = Vec::with_capacity(classes.len());
    for class in &classes {
        let representative = class.representative()?;
        let row = radical
            .members()
            .iter()
            .map(|l| sigma_scalar(&representative, &unit, l))
            .collect::<Result<Vec<_>>>()?;
        row_labels.push(Label::Restricted(class.restricted_character.values.clone()));
        entries.push(row);
    }
    let col_labels = radical.members().iter().cloned().map(Label::Element).collect();
    LabeledUnityMatrix::new(row_labels, col_labels, entries)
}

/// S̃ through the Drinfeld center: Müger columns of the center S-matrix with
/// repeated rows removed.
pub fn st_matrix_via_center(beta: &Bicharacter) -> Result<LabeledUnityMatrix> {
    let q = beta.quadratic_form()?;
    let radical = q.muger_center();
    let s = center_s_matrix(beta.group())?;
    let cols = radical
        .members()
        .iter()
        .map(|l| embed_muger(l, beta))
        .collect::<Result<Vec<_>>>()?;
    let out = restrict_and_dedup(&s, &cols)?;
    if out.nrows() != radical.order() {
        return Err(Error::InvariantViolation(format!(
            "center route produced {} rows for a Müger center of order {}",
            out.nrows(),
            radical.order()
        )));
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Verdict {
    Pass,
    Fail,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
        })
    }
}

/// Outcome of comparing S̃ with the character table of the Müger center.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremReport {
    pub form: QuadraticForm,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bicharacter: Option<Bicharacter>,
    pub radical: Vec<GroupElement>,
    pub flavor: Flavor,
    pub st_direct: LabeledUnityMatrix,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub st_oracle: Option<LabeledUnityMatrix>,
    pub char_table: LabeledUnityMatrix,
    pub verdict: Verdict,
    /// `st_direct[i][j] == char_table[rows[i]][cols[j]]`.
    pub direct_witness: Option<PermutationWitness>,
    /// `st_oracle[i][j] == st_direct[rows[i]][cols[j]]`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub oracle_witness: Option<PermutationWitness>,
}

/// Certifies one instance along the direct route and, if asked, the center
/// route. The center route needs `q` to come from a bicharacter.
pub fn verify_theorem(q: &QuadraticForm, with_oracle: bool) -> Result<TheoremReport> {
    let beta = if with_oracle {
        Some(q.bicharacter_lift().ok_or_else(|| {
            Error::OracleUnavailable(format!("{q} is not β(g,g) for any bicharacter β"))
        })?)
    } else {
        None
    };
    certify(q.clone(), beta)
}

/// Certifies the form induced by `beta`, running the center route on `beta` itself.
pub fn verify_theorem_bicharacter(beta: &Bicharacter) -> Result<TheoremReport> {
    certify(beta.quadratic_form()?, Some(beta.clone()))
}

fn certify(form: QuadraticForm, beta: Option<Bicharacter>) -> Result<TheoremReport> {
    let classification = form.classify()?;
    let st_direct = st_matrix_direct(&form)?;
    let table = char_table(&classification.radical)?;
    for (name, m) in [("S̃", &st_direct), ("character table", &table.table)] {
        let defect = orthogonality_defect(m)?;
        if defect >= ORTHOGONALITY_TOLERANCE {
            return Err(Error::InvariantViolation(format!(
                "{name} has orthogonality defect {defect:e}"
            )));
        }
    }
    let direct_witness = matrices_equal_up_to_perm(&table.table, &st_direct);
    let (st_oracle, oracle_witness) = match &beta {
        Some(b) => {
            let oracle = st_matrix_via_center(b)?;
            let w = matrices_equal_up_to_perm(&st_direct, &oracle);
            (Some(oracle), w)
        }
        None => (None, None),
    };
    let pass = direct_witness.is_some() && (beta.is_none() || oracle_witness.is_some());
    Ok(TheoremReport {
        form,
        bicharacter: beta,
        radical: classification.radical.members().to_vec(),
        flavor: classification.flavor,
        st_direct,
        st_oracle,
        char_table: table.table,
        verdict: if pass { Verdict::Pass } else { Verdict::Fail },
        direct_witness,
        oracle_witness,
    })
}
