//! Roots of unity as exact rational exponents, and labeled matrices of them.

use std::collections::{HashMap, HashSet};
use std::fmt;

use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::groups::GroupElement;
use crate::rational::{format_rational, frac, parse_rational, Rational};

/// The root of unity `e^{2πi x}` for an exponent `x` kept reduced in `[0, 1)`.
///
/// Ordering is by exponent, so `1` is the least element.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct UnityScalar(Rational);

impl UnityScalar {
    pub const ONE: UnityScalar = UnityScalar(Rational::new_raw(0, 1));

    /// Normalizes an arbitrary rational exponent into `[0, 1)`.
    pub fn from_exponent(exponent: Rational) -> Self {
        UnityScalar(frac(exponent))
    }

    /// `e^{2πi num/den}`. Panics on a zero denominator.
    pub fn new(num: i64, den: i64) -> Self {
        Self::from_exponent(Rational::new(num, den))
    }

    pub fn exponent(&self) -> Rational {
        self.0
    }

    pub fn is_one(&self) -> bool {
        self.0.is_zero()
    }

    /// Multiplicative order: the reduced denominator of the exponent.
    pub fn order(&self) -> i64 {
        *self.0.denom()
    }

    pub fn inv(self) -> Self {
        Self::from_exponent(-self.0)
    }

    pub fn pow(self, m: i64) -> Self {
        // Reduce m modulo the order first so the product stays small.
        let den = *self.0.denom();
        let m = m.mod_floor(&den);
        Self::from_exponent(self.0 * Rational::from_integer(m))
    }

    pub fn to_complex(&self) -> Complex64 {
        let x = self.0.to_f64().unwrap_or(0.0);
        Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * x)
    }

    /// `1`, `-1`, `i` or `-i` when the value is a fourth root of unity.
    pub fn symbol(&self) -> Option<&'static str> {
        match (*self.0.numer(), *self.0.denom()) {
            (0, _) => Some("1"),
            (1, 2) => Some("-1"),
            (1, 4) => Some("i"),
            (3, 4) => Some("-i"),
            _ => None,
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        parse_rational(s).map(Self::from_exponent)
    }
}

impl std::ops::Mul for UnityScalar {
    type Output = UnityScalar;

    fn mul(self, rhs: UnityScalar) -> UnityScalar {
        UnityScalar::from_exponent(self.0 + rhs.0)
    }
}

impl std::ops::Div for UnityScalar {
    type Output = UnityScalar;

    fn div(self, rhs: UnityScalar) -> UnityScalar {
        UnityScalar::from_exponent(self.0 - rhs.0)
    }
}

impl std::iter::Product for UnityScalar {
    fn product<I: Iterator<Item = UnityScalar>>(iter: I) -> Self {
        iter.fold(UnityScalar::ONE, |acc, x| acc * x)
    }
}

impl fmt::Display for UnityScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_rational(&self.0))
    }
}

impl fmt::Debug for UnityScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e(2πi·{})", format_rational(&self.0))
    }
}

impl Serialize for UnityScalar {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&format_rational(&self.0))
    }
}

impl<'de> Deserialize<'de> for UnityScalar {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        UnityScalar::parse(&s).map_err(serde::de::Error::custom)
    }
}

/// Row or column label of a [`LabeledUnityMatrix`].
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "kind", content = "value", rename_all = "snake_case")]
pub enum Label {
    /// A group element, given by its residues.
    Element(GroupElement),
    /// A character `χ_a` of the ambient group, given by its index `a`.
    Character(GroupElement),
    /// A character given in coordinates of a cyclic decomposition.
    Coordinates(Vec<u32>),
    /// A simple object `(g, χ_a)` of the Drinfeld center.
    CenterSimple {
        grade: GroupElement,
        character: GroupElement,
    },
    /// A character of a subgroup, listed by its values on the members.
    Restricted(Vec<UnityScalar>),
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Element(g) => write!(f, "{g}"),
            Label::Character(a) => write!(f, "χ{a}"),
            Label::Coordinates(c) => {
                let parts: Vec<String> = c.iter().map(u32::to_string).collect();
                write!(f, "χ[{}]", parts.join(","))
            }
            Label::CenterSimple { grade, character } => write!(f, "{grade}⊗χ{character}"),
            Label::Restricted(values) => {
                let parts: Vec<String> = values.iter().map(|v| v.to_string()).collect();
                write!(f, "[{}]", parts.join(","))
            }
        }
    }
}

/// Dense matrix of roots of unity with labeled rows and columns.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "MatrixDoc")]
pub struct LabeledUnityMatrix {
    row_labels: Vec<Label>,
    col_labels: Vec<Label>,
    entries: Vec<Vec<UnityScalar>>,
}

#[derive(Deserialize)]
struct MatrixDoc {
    row_labels: Vec<Label>,
    col_labels: Vec<Label>,
    entries: Vec<Vec<UnityScalar>>,
}

impl TryFrom<MatrixDoc> for LabeledUnityMatrix {
    type Error = Error;

    fn try_from(doc: MatrixDoc) -> Result<Self> {
        LabeledUnityMatrix::new(doc.row_labels, doc.col_labels, doc.entries)
    }
}

fn check_distinct(labels: &[Label], axis: &str) -> Result<()> {
    let mut seen = HashSet::with_capacity(labels.len());
    for l in labels {
        if !seen.insert(l) {
            return Err(Error::Input(format!("duplicate {axis} label {l}")));
        }
    }
    Ok(())
}

impl LabeledUnityMatrix {
    pub fn new(
        row_labels: Vec<Label>,
        col_labels: Vec<Label>,
        entries: Vec<Vec<UnityScalar>>,
    ) -> Result<Self> {
        if entries.len() != row_labels.len() {
            return Err(Error::Input(format!(
                "{} rows but {} row labels",
                entries.len(),
                row_labels.len()
            )));
        }
        if let Some(row) = entries.iter().find(|r| r.len() != col_labels.len()) {
            return Err(Error::Input(format!(
                "row of length {} but {} column labels",
                row.len(),
                col_labels.len()
            )));
        }
        check_distinct(&row_labels, "row")?;
        check_distinct(&col_labels, "column")?;
        Ok(LabeledUnityMatrix {
            row_labels,
            col_labels,
            entries,
        })
    }

    /// Builds the matrix entry by entry.
    pub fn from_fn<F>(row_labels: Vec<Label>, col_labels: Vec<Label>, mut f: F) -> Result<Self>
    where
        F: FnMut(usize, usize) -> UnityScalar,
    {
        let entries = (0..row_labels.len())
            .map(|i| (0..col_labels.len()).map(|j| f(i, j)).collect())
            .collect();
        Self::new(row_labels, col_labels, entries)
    }

    pub fn nrows(&self) -> usize {
        self.row_labels.len()
    }

    pub fn ncols(&self) -> usize {
        self.col_labels.len()
    }

    pub fn row_labels(&self) -> &[Label] {
        &self.row_labels
    }

    pub fn col_labels(&self) -> &[Label] {
        &self.col_labels
    }

    pub fn entries(&self) -> &[Vec<UnityScalar>] {
        &self.entries
    }

    pub fn entry(&self, i: usize, j: usize) -> UnityScalar {
        self.entries[i][j]
    }

    pub fn row(&self, i: usize) -> &[UnityScalar] {
        &self.entries[i]
    }

    /// Applies `rows`/`cols` so that `out[i][j] = self[rows[i]][cols[j]]`, labels included.
    pub fn permuted(&self, rows: &[usize], cols: &[usize]) -> Self {
        LabeledUnityMatrix {
            row_labels: rows.iter().map(|&i| self.row_labels[i].clone()).collect(),
            col_labels: cols.iter().map(|&j| self.col_labels[j].clone()).collect(),
            entries: rows
                .iter()
                .map(|&i| cols.iter().map(|&j| self.entries[i][j]).collect())
                .collect(),
        }
    }

    /// Alternately sorts rows and columns lexicographically by exponent
    /// sequence until neither sort moves anything.
    ///
    /// Returns the sorted entry grid with the row and column orders used. The
    /// result does not depend on the input row order. It is *not* a complete
    /// invariant under column permutations, which is why
    /// [`matrices_equal_up_to_perm`] falls back to a search.
    pub fn canonical_form(&self) -> (Vec<Vec<UnityScalar>>, Vec<usize>, Vec<usize>) {
        canonical_form(&self.entries, self.ncols())
    }
}

fn canonical_form(
    entries: &[Vec<UnityScalar>],
    ncols: usize,
) -> (Vec<Vec<UnityScalar>>, Vec<usize>, Vec<usize>) {
    let n = entries.len();
    let mut rows: Vec<usize> = (0..n).collect();
    let mut cols: Vec<usize> = (0..ncols).collect();
    let row_key = |i: usize, cols: &[usize]| -> Vec<UnityScalar> {
        cols.iter().map(|&j| entries[i][j]).collect()
    };
    let col_key = |j: usize, rows: &[usize]| -> Vec<UnityScalar> {
        rows.iter().map(|&i| entries[i][j]).collect()
    };
    // Sorting by (key, index) keeps ties stable across iterations.
    let limit = 4 * (n + ncols) + 8;
    for _ in 0..limit {
        let mut new_rows = rows.clone();
        new_rows.sort_by_key(|&x| row_key(x, &cols));
        let mut new_cols = cols.clone();
        new_cols.sort_by_key(|&x| col_key(x, &new_rows));
        let stable = grid(entries, &new_rows, &new_cols) == grid(entries, &rows, &cols);
        rows = new_rows;
        cols = new_cols;
        if stable {
            break;
        }
    }
    (grid(entries, &rows, &cols), rows, cols)
}

fn grid(entries: &[Vec<UnityScalar>], rows: &[usize], cols: &[usize]) -> Vec<Vec<UnityScalar>> {
    rows.iter()
        .map(|&i| cols.iter().map(|&j| entries[i][j]).collect())
        .collect()
}

/// Row and column permutations relating two matrices:
/// `second[i][j] == first[rows[i]][cols[j]]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PermutationWitness {
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
}

impl PermutationWitness {
    pub fn identity(nrows: usize, ncols: usize) -> Self {
        PermutationWitness {
            rows: (0..nrows).collect(),
            cols: (0..ncols).collect(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.rows.iter().enumerate().all(|(i, &r)| i == r)
            && self.cols.iter().enumerate().all(|(j, &c)| j == c)
    }

    /// Checks `second[i][j] == first[rows[i]][cols[j]]` for every entry.
    pub fn relates(&self, first: &LabeledUnityMatrix, second: &LabeledUnityMatrix) -> bool {
        first.nrows() == second.nrows()
            && first.ncols() == second.ncols()
            && self.rows.len() == first.nrows()
            && self.cols.len() == first.ncols()
            && is_permutation(&self.rows)
            && is_permutation(&self.cols)
            && (0..second.nrows()).all(|i| {
                (0..second.ncols())
                    .all(|j| second.entries[i][j] == first.entries[self.rows[i]][self.cols[j]])
            })
    }
}

fn is_permutation(p: &[usize]) -> bool {
    let mut seen = vec![false; p.len()];
    p.iter().all(|&x| x < p.len() && !std::mem::replace(&mut seen[x], true))
}

fn invert(p: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; p.len()];
    for (i, &x) in p.iter().enumerate() {
        inv[x] = i;
    }
    inv
}

/// Decides whether `second` is `first` with rows and columns permuted,
/// comparing entries exactly and ignoring labels. Returns a witness when so.
pub fn matrices_equal_up_to_perm(
    first: &LabeledUnityMatrix,
    second: &LabeledUnityMatrix,
) -> Option<PermutationWitness> {
    if first.nrows() != second.nrows() || first.ncols() != second.ncols() {
        return None;
    }
    if first.entries == second.entries {
        return Some(PermutationWitness::identity(first.nrows(), first.ncols()));
    }
    let (ca, ra, cca) = first.canonical_form();
    let (cb, rb, ccb) = second.canonical_form();
    let witness = if ca == cb {
        let rb_inv = invert(&rb);
        let cb_inv = invert(&ccb);
        PermutationWitness {
            rows: (0..second.nrows()).map(|r| ra[rb_inv[r]]).collect(),
            cols: (0..second.ncols()).map(|c| cca[cb_inv[c]]).collect(),
        }
    } else {
        PermutationSearch::new(&first.entries, &second.entries, first.ncols())?.run()?
    };
    debug_assert!(witness.relates(first, second));
    Some(witness)
}

/// Backtracking search assigning rows of `b` to rows of `a`, keeping the
/// column signatures of both sides equal as multisets.
struct PermutationSearch<'m> {
    a: &'m [Vec<UnityScalar>],
    b: &'m [Vec<UnityScalar>],
    ncols: usize,
    a_keys: Vec<Vec<UnityScalar>>,
    b_keys: Vec<Vec<UnityScalar>>,
}

fn sorted(row: &[UnityScalar]) -> Vec<UnityScalar> {
    let mut k = row.to_vec();
    k.sort();
    k
}

fn same_multiset<T: Ord + Clone>(x: &[T], y: &[T]) -> bool {
    let mut x = x.to_vec();
    let mut y = y.to_vec();
    x.sort();
    y.sort();
    x == y
}

impl<'m> PermutationSearch<'m> {
    fn new(a: &'m [Vec<UnityScalar>], b: &'m [Vec<UnityScalar>], ncols: usize) -> Option<Self> {
        let a_keys: Vec<_> = a.iter().map(|r| sorted(r)).collect();
        let b_keys: Vec<_> = b.iter().map(|r| sorted(r)).collect();
        if !same_multiset(&a_keys, &b_keys) {
            return None;
        }
        let col_keys = |m: &[Vec<UnityScalar>]| -> Vec<Vec<UnityScalar>> {
            (0..ncols)
                .map(|j| sorted(&m.iter().map(|r| r[j]).collect::<Vec<_>>()))
                .collect()
        };
        if !same_multiset(&col_keys(a), &col_keys(b)) {
            return None;
        }
        Some(PermutationSearch {
            a,
            b,
            ncols,
            a_keys,
            b_keys,
        })
    }

    fn run(&self) -> Option<PermutationWitness> {
        let n = self.b.len();
        let mut assigned = Vec::with_capacity(n);
        let mut used = vec![false; n];
        let classes = (vec![0u32; self.ncols], vec![0u32; self.ncols]);
        let (a_cls, b_cls) = self.extend(&mut assigned, &mut used, classes)?;
        // Columns with equal final class are identical on both sides; pair them up.
        let mut pool: HashMap<u32, Vec<usize>> = HashMap::new();
        for (j, c) in a_cls.iter().enumerate().rev() {
            pool.entry(*c).or_default().push(j);
        }
        let cols = b_cls
            .iter()
            .map(|c| pool.get_mut(c).and_then(Vec::pop))
            .collect::<Option<Vec<_>>>()?;
        Some(PermutationWitness {
            rows: assigned,
            cols,
        })
    }

    fn extend(
        &self,
        assigned: &mut Vec<usize>,
        used: &mut [bool],
        classes: (Vec<u32>, Vec<u32>),
    ) -> Option<(Vec<u32>, Vec<u32>)> {
        let i = assigned.len();
        if i == self.b.len() {
            return Some(classes);
        }
        for p in 0..self.a.len() {
            if used[p] || self.a_keys[p] != self.b_keys[i] {
                continue;
            }
            let Some(refined) = self.refine(&classes, &self.a[p], &self.b[i]) else {
                continue;
            };
            used[p] = true;
            assigned.push(p);
            if let Some(done) = self.extend(assigned, used, refined) {
                return Some(done);
            }
            assigned.pop();
            used[p] = false;
        }
        None
    }

    fn refine(
        &self,
        (a_cls, b_cls): &(Vec<u32>, Vec<u32>),
        a_row: &[UnityScalar],
        b_row: &[UnityScalar],
    ) -> Option<(Vec<u32>, Vec<u32>)> {
        let mut ids: HashMap<(u32, UnityScalar), u32> = HashMap::new();
        let mut id = |c: u32, v: UnityScalar| {
            let next = ids.len() as u32;
            *ids.entry((c, v)).or_insert(next)
        };
        let new_a: Vec<u32> = (0..self.ncols).map(|j| id(a_cls[j], a_row[j])).collect();
        let new_b: Vec<u32> = (0..self.ncols).map(|j| id(b_cls[j], b_row[j])).collect();
        let mut balance = vec![0i64; ids.len()];
        for (&x, &y) in new_a.iter().zip(&new_b) {
            balance[x as usize] += 1;
            balance[y as usize] -= 1;
        }
        balance
            .iter()
            .all(|&d| d == 0)
            .then_some((new_a, new_b))
    }
}

/// `max |(M·M^H − n·I) / n|` over all entries, for a square matrix of size `n`.
pub fn orthogonality_defect(m: &LabeledUnityMatrix) -> Result<f64> {
    if m.nrows() != m.ncols() {
        return Err(Error::Input(format!(
            "orthogonality defect needs a square matrix, got {}x{}",
            m.nrows(),
            m.ncols()
        )));
    }
    let n = m.nrows();
    if n == 0 {
        return Ok(0.0);
    }
    let z: Vec<Vec<Complex64>> = m
        .entries
        .iter()
        .map(|r| r.iter().map(UnityScalar::to_complex).collect())
        .collect();
    let mut defect = 0.0f64;
    for i in 0..n {
        for j in 0..n {
            let mut acc = Complex64::new(0.0, 0.0);
            for k in 0..n {
                acc += z[i][k] * z[j][k].conj();
            }
            if i == j {
                acc -= n as f64;
            }
            defect = defect.max(acc.norm() / n as f64);
        }
    }
    Ok(defect)
}
