//! Quadratic forms and bicharacters presenting braidings on `Vec_G`.
//!
//! A quadratic form is given by coefficients `r_i` and `s_ij` (`i < j`) with
//! exponent `Q(x) = Σ r_i x_i² + Σ s_ij x_i x_j  (mod 1)`. Its polarization
//! `b(g, h) = Q(g+h) − Q(g) − Q(h)` is the double braiding.

use std::collections::BTreeMap;
use std::fmt;

use num_integer::Integer;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::groups::{FiniteAbelianGroup, GroupElement, Subgroup};
use crate::rational::{format_rational, frac, parse_rational, Rational};
use crate::roots::UnityScalar;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "FormDoc", into = "FormDoc")]
pub struct QuadraticForm {
    group: FiniteAbelianGroup,
    diag: Vec<Rational>,
    offdiag: BTreeMap<(usize, usize), Rational>,
    /// `q` on every element, indexed like `group.elements()`.
    values: Vec<UnityScalar>,
    /// `b(e_i, ·)` for each standard generator `e_i`.
    generator_braiding: Vec<Vec<UnityScalar>>,
    radical: Subgroup,
}

/// Serialized shape of a quadratic form: `"p/q"` strings and `"i,j"` keys.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FormDoc {
    pub group: Vec<u32>,
    #[serde(default)]
    pub diag: Vec<String>,
    #[serde(default)]
    pub offdiag: BTreeMap<String, String>,
}

impl TryFrom<FormDoc> for QuadraticForm {
    type Error = Error;

    fn try_from(doc: FormDoc) -> Result<Self> {
        let group = FiniteAbelianGroup::new(doc.group)?;
        QuadraticForm::from_strings(group, &doc.diag, &doc.offdiag)
    }
}

impl From<QuadraticForm> for FormDoc {
    fn from(q: QuadraticForm) -> Self {
        FormDoc {
            group: q.group.orders().to_vec(),
            diag: q.diag.iter().map(format_rational).collect(),
            offdiag: q
                .offdiag
                .iter()
                .map(|((i, j), s)| (format!("{i},{j}"), format_rational(s)))
                .collect(),
        }
    }
}

/// Parses an off-diagonal key `"i,j"`.
pub fn parse_pair(key: &str) -> Result<(usize, usize)> {
    let bad = || Error::Input(format!("malformed off-diagonal key {key:?}, expected \"i,j\""));
    let (i, j) = key.split_once(',').ok_or_else(bad)?;
    Ok((
        i.trim().parse().map_err(|_| bad())?,
        j.trim().parse().map_err(|_| bad())?,
    ))
}

impl QuadraticForm {
    /// Builds and validates a form. Coefficients are reduced modulo 1; an empty
    /// `diag` means all diagonal coefficients are zero.
    pub fn new(
        group: FiniteAbelianGroup,
        diag: Vec<Rational>,
        offdiag: BTreeMap<(usize, usize), Rational>,
    ) -> Result<Self> {
        let k = group.rank();
        let diag = if diag.is_empty() {
            vec![Rational::zero(); k]
        } else if diag.len() == k {
            diag.into_iter().map(frac).collect()
        } else {
            return Err(Error::Input(format!(
                "{} diagonal coefficients for a group with {k} factors",
                diag.len()
            )));
        };
        let mut normalized = BTreeMap::new();
        for ((i, j), s) in offdiag {
            if i == j || i.max(j) >= k {
                return Err(Error::Input(format!("off-diagonal index ({i},{j}) invalid for rank {k}")));
            }
            let key = (i.min(j), i.max(j));
            if normalized.insert(key, frac(s)).is_some() {
                return Err(Error::Input(format!("off-diagonal pair {key:?} given twice")));
            }
        }
        normalized.retain(|_, s: &mut Rational| !s.is_zero());
        check_coefficients(&group, &diag, &normalized)?;
        let values: Vec<UnityScalar> = group
            .elements()
            .iter()
            .map(|g| UnityScalar::from_exponent(evaluate(&diag, &normalized, g)))
            .collect();
        check_quadratic_table(&group, &values)?;
        let generator_braiding: Vec<Vec<UnityScalar>> = group
            .generators()
            .iter()
            .map(|e| {
                let e = group.index_of(e);
                (0..group.size()).map(|k| polarize(&group, &values, e, k)).collect()
            })
            .collect();
        let radical = radical_of(&group, &generator_braiding);
        Ok(QuadraticForm {
            group,
            diag,
            offdiag: normalized,
            values,
            generator_braiding,
            radical,
        })
    }

    pub fn from_strings(
        group: FiniteAbelianGroup,
        diag: &[String],
        offdiag: &BTreeMap<String, String>,
    ) -> Result<Self> {
        let diag = diag
            .iter()
            .map(|s| parse_rational(s))
            .collect::<Result<Vec<_>>>()?;
        let offdiag = offdiag
            .iter()
            .map(|(k, v)| Ok((parse_pair(k)?, parse_rational(v)?)))
            .collect::<Result<BTreeMap<_, _>>>()?;
        Self::new(group, diag, offdiag)
    }

    /// The form with all coefficients zero.
    pub fn trivial(group: FiniteAbelianGroup) -> Self {
        Self::new(group, Vec::new(), BTreeMap::new()).expect("zero form is valid")
    }

    pub fn group(&self) -> &FiniteAbelianGroup {
        &self.group
    }

    pub fn diag(&self) -> &[Rational] {
        &self.diag
    }

    pub fn offdiag(&self) -> &BTreeMap<(usize, usize), Rational> {
        &self.offdiag
    }

    /// `q(g)`.
    pub fn value(&self, g: &GroupElement) -> Result<UnityScalar> {
        self.group.check(g)?;
        Ok(self.values[self.group.index_of(g)])
    }

    /// `q` on every element, in element order.
    pub fn values(&self) -> &[UnityScalar] {
        &self.values
    }

    /// `b(g, h) = q(g+h) / (q(g) q(h))`.
    pub fn double_braiding(&self, g: &GroupElement, h: &GroupElement) -> Result<UnityScalar> {
        self.group.check(g)?;
        self.group.check(h)?;
        Ok(self.b_index(self.group.index_of(g), self.group.index_of(h)))
    }

    pub(crate) fn b_index(&self, i: usize, j: usize) -> UnityScalar {
        polarize(&self.group, &self.values, i, j)
    }

    /// `b(e_i, k)` for the `i`-th standard generator.
    pub(crate) fn b_generator(&self, i: usize, k: usize) -> UnityScalar {
        self.generator_braiding[i][k]
    }

    /// The radical of `b`.
    pub fn muger_center(&self) -> &Subgroup {
        &self.radical
    }

    /// Radical together with the sign character `q|radical` and the
    /// Tannakian / super-Tannakian flavor.
    pub fn classify(&self) -> Result<MugerClassification> {
        let radical = self.muger_center();
        let minus_one = UnityScalar::new(1, 2);
        let mut sign_character = BTreeMap::new();
        for l in radical.members() {
            let v = self.values[self.group.index_of(l)];
            let sign = if v.is_one() {
                1
            } else if v == minus_one {
                -1
            } else {
                return Err(Error::InvariantViolation(format!(
                    "q({l}) = e^(2πi·{v}) on the radical is not ±1"
                )));
            };
            sign_character.insert(l.clone(), sign);
        }
        for (x, sx) in &sign_character {
            for (y, sy) in &sign_character {
                let sum = self.group.add(x, y)?;
                if sign_character[&sum] != sx * sy {
                    return Err(Error::InvariantViolation(format!(
                        "q restricted to the radical is not multiplicative at {x}, {y}"
                    )));
                }
            }
        }
        let flavor = if sign_character.values().all(|&s| s == 1) {
            Flavor::Tannakian
        } else {
            Flavor::SuperTannakian
        };
        Ok(MugerClassification {
            radical: radical.clone(),
            sign_character,
            flavor,
        })
    }

    /// A bicharacter `β` with `β(g, g) = q(g)` for all `g`, if one exists.
    ///
    /// One exists exactly when every `n_i r_i` is an integer: `β(e_i, e_i)`
    /// must equal `r_i`, and the off-diagonal part can always be put in the
    /// upper triangle.
    pub fn bicharacter_lift(&self) -> Option<Bicharacter> {
        let orders = self.group.orders();
        let k = self.group.rank();
        if (0..k).any(|i| !(self.diag[i] * Rational::from_integer(orders[i] as i64)).is_integer()) {
            return None;
        }
        let mut matrix = vec![vec![Rational::zero(); k]; k];
        for i in 0..k {
            matrix[i][i] = self.diag[i];
        }
        for (&(i, j), &s) in &self.offdiag {
            matrix[i][j] = s;
        }
        let beta = Bicharacter::new(self.group.clone(), matrix)
            .expect("lifted coefficients are well defined");
        debug_assert_eq!(beta.quadratic_form().as_ref(), Ok(self));
        Some(beta)
    }
}

impl fmt::Display for QuadraticForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms: Vec<String> = self
            .diag
            .iter()
            .enumerate()
            .filter(|(_, r)| !r.is_zero())
            .map(|(i, r)| format!("{}·x{i}²", format_rational(r)))
            .collect();
        terms.extend(
            self.offdiag
                .iter()
                .map(|((i, j), s)| format!("{}·x{i}x{j}", format_rational(s))),
        );
        if terms.is_empty() {
            terms.push("0".into());
        }
        write!(f, "Q on {}: {}", self.group, terms.join(" + "))
    }
}

fn evaluate(
    diag: &[Rational],
    offdiag: &BTreeMap<(usize, usize), Rational>,
    g: &GroupElement,
) -> Rational {
    let x = g.residues();
    let mut acc = Rational::zero();
    for (i, r) in diag.iter().enumerate() {
        let xi = x[i] as i64;
        acc = frac(acc + *r * Rational::from_integer(xi * xi));
    }
    for (&(i, j), s) in offdiag {
        acc = frac(acc + *s * Rational::from_integer(x[i] as i64 * x[j] as i64));
    }
    acc
}

/// Elements braiding trivially with every standard generator, hence with everything.
fn radical_of(group: &FiniteAbelianGroup, generator_braiding: &[Vec<UnityScalar>]) -> Subgroup {
    let members = (0..group.size())
        .filter(|&l| generator_braiding.iter().all(|row| row[l].is_one()))
        .map(|l| group.element_at(l))
        .collect();
    Subgroup::from_members(group, members).expect("radical of a bilinear form is a subgroup")
}

fn polarize(group: &FiniteAbelianGroup, values: &[UnityScalar], i: usize, j: usize) -> UnityScalar {
    values[group.add_index(i, j)] / (values[i] * values[j])
}

fn times(r: Rational, n: u32) -> Rational {
    r * Rational::from_integer(n as i64)
}

/// Coefficient conditions making `Q` independent of residue lifts.
fn check_coefficients(
    group: &FiniteAbelianGroup,
    diag: &[Rational],
    offdiag: &BTreeMap<(usize, usize), Rational>,
) -> Result<()> {
    let n = group.orders();
    for (i, &r) in diag.iter().enumerate() {
        if !times(r, 2 * n[i]).is_integer() || !times(times(r, n[i]), n[i]).is_integer() {
            return Err(Error::WellDefinedness(format!(
                "diagonal coefficient {} on Z_{}: need 2n·r and n²·r integral",
                format_rational(&r),
                n[i]
            )));
        }
    }
    for (&(i, j), &s) in offdiag {
        if !times(s, n[i]).is_integer() || !times(s, n[j]).is_integer() {
            return Err(Error::WellDefinedness(format!(
                "off-diagonal coefficient {} on Z_{}×Z_{}: need n_i·s and n_j·s integral",
                format_rational(&s),
                n[i],
                n[j]
            )));
        }
    }
    Ok(())
}

/// Exhaustively checks that a table of values is a quadratic function:
/// `q(0) = 1`, `q(−g) = q(g)`, `q(m·g) = q(g)^{m²}` for `1 ≤ m ≤ ord(g)`, and
/// the polarization is additive in its first slot along every generator.
pub fn check_quadratic_table(group: &FiniteAbelianGroup, values: &[UnityScalar]) -> Result<()> {
    if values.len() != group.size() {
        return Err(Error::Input(format!(
            "{} values for a group of order {}",
            values.len(),
            group.size()
        )));
    }
    if !values[0].is_one() {
        return Err(Error::Quadraticity(format!("q(0) = e^(2πi·{}) ≠ 1", values[0])));
    }
    for (i, g) in group.elements().iter().enumerate() {
        let qg = values[i];
        let neg = group.index_of(&group.scale_unchecked(g, -1));
        if values[neg] != qg {
            return Err(Error::Quadraticity(format!("q(−{g}) ≠ q({g})")));
        }
        let order = group.order_unchecked(g) as i64;
        let mut multiple = 0usize;
        for m in 1..=order {
            multiple = group.add_index(multiple, i);
            if values[multiple] != qg.pow(m * m) {
                return Err(Error::Quadraticity(format!("q({m}·{g}) ≠ q({g})^{}", m * m)));
            }
        }
    }
    let gens: Vec<usize> = group.generators().iter().map(|e| group.index_of(e)).collect();
    for g in 0..group.size() {
        for h in 0..group.size() {
            let bgh = polarize(group, values, g, h);
            for &e in &gens {
                let lhs = polarize(group, values, group.add_index(g, e), h);
                if lhs != bgh * polarize(group, values, e, h) {
                    return Err(Error::Bilinearity(format!(
                        "b({} + {}, {}) ≠ b({0}, {2})·b({1}, {2})",
                        group.element_at(g),
                        group.element_at(e),
                        group.element_at(h)
                    )));
                }
            }
        }
    }
    Ok(())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Flavor {
    Tannakian,
    #[serde(rename = "superTannakian")]
    SuperTannakian,
}

impl fmt::Display for Flavor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Flavor::Tannakian => "Tannakian",
            Flavor::SuperTannakian => "superTannakian",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MugerClassification {
    pub radical: Subgroup,
    /// `q(l) ∈ {+1, −1}` for each radical element `l`.
    pub sign_character: BTreeMap<GroupElement, i8>,
    pub flavor: Flavor,
}

/// `B(g, h) = Σ β_ij g_i h_j  (mod 1)`, bilinear by construction.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "BicharacterDoc", into = "BicharacterDoc")]
pub struct Bicharacter {
    group: FiniteAbelianGroup,
    matrix: Vec<Vec<Rational>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BicharacterDoc {
    pub group: Vec<u32>,
    pub matrix: Vec<Vec<String>>,
}

impl TryFrom<BicharacterDoc> for Bicharacter {
    type Error = Error;

    fn try_from(doc: BicharacterDoc) -> Result<Self> {
        let group = FiniteAbelianGroup::new(doc.group)?;
        Bicharacter::from_strings(group, &doc.matrix)
    }
}

impl From<Bicharacter> for BicharacterDoc {
    fn from(b: Bicharacter) -> Self {
        BicharacterDoc {
            group: b.group.orders().to_vec(),
            matrix: b
                .matrix
                .iter()
                .map(|row| row.iter().map(format_rational).collect())
                .collect(),
        }
    }
}

impl Bicharacter {
    pub fn new(group: FiniteAbelianGroup, matrix: Vec<Vec<Rational>>) -> Result<Self> {
        let k = group.rank();
        if matrix.len() != k || matrix.iter().any(|r| r.len() != k) {
            return Err(Error::Input(format!("bicharacter matrix must be {k}×{k}")));
        }
        let n = group.orders();
        let matrix: Vec<Vec<Rational>> = matrix
            .into_iter()
            .map(|row| row.into_iter().map(frac).collect())
            .collect();
        for i in 0..k {
            for j in 0..k {
                let b = matrix[i][j];
                if !times(b, n[i]).is_integer() || !times(b, n[j]).is_integer() {
                    return Err(Error::WellDefinedness(format!(
                        "β[{i}][{j}] = {} on Z_{}×Z_{}: need n_i·β and n_j·β integral",
                        format_rational(&b),
                        n[i],
                        n[j]
                    )));
                }
            }
        }
        Ok(Bicharacter { group, matrix })
    }

    pub fn from_strings(group: FiniteAbelianGroup, matrix: &[Vec<String>]) -> Result<Self> {
        let matrix = matrix
            .iter()
            .map(|row| row.iter().map(|s| parse_rational(s)).collect())
            .collect::<Result<Vec<Vec<_>>>>()?;
        Self::new(group, matrix)
    }

    pub fn zero(group: FiniteAbelianGroup) -> Self {
        let k = group.rank();
        Bicharacter {
            group,
            matrix: vec![vec![Rational::zero(); k]; k],
        }
    }

    pub fn group(&self) -> &FiniteAbelianGroup {
        &self.group
    }

    pub fn matrix(&self) -> &[Vec<Rational>] {
        &self.matrix
    }

    pub fn eval(&self, g: &GroupElement, h: &GroupElement) -> Result<UnityScalar> {
        self.group.check(g)?;
        self.group.check(h)?;
        Ok(self.eval_unchecked(g, h))
    }

    pub(crate) fn eval_unchecked(&self, g: &GroupElement, h: &GroupElement) -> UnityScalar {
        let (x, y) = (g.residues(), h.residues());
        let mut acc = Rational::zero();
        for (i, row) in self.matrix.iter().enumerate() {
            for (j, b) in row.iter().enumerate() {
                if !b.is_zero() {
                    acc = frac(acc + *b * Rational::from_integer(x[i] as i64 * y[j] as i64));
                }
            }
        }
        UnityScalar::from_exponent(acc)
    }

    /// The form `q(g) = β(g, g)`, whose double braiding is `β(g,h)·β(h,g)`.
    pub fn quadratic_form(&self) -> Result<QuadraticForm> {
        let k = self.group.rank();
        let diag = (0..k).map(|i| self.matrix[i][i]).collect();
        let mut offdiag = BTreeMap::new();
        for i in 0..k {
            for j in i + 1..k {
                offdiag.insert((i, j), self.matrix[i][j] + self.matrix[j][i]);
            }
        }
        QuadraticForm::new(self.group.clone(), diag, offdiag).map_err(|e| {
            Error::InvariantViolation(format!("form induced by a valid bicharacter rejected: {e}"))
        })
    }

    /// Every bicharacter of `group` in its coordinates: `β_ij` ranges over
    /// multiples of `1 / gcd(n_i, n_j)` in `[0, 1)`.
    pub fn enumerate(group: &FiniteAbelianGroup) -> Vec<Bicharacter> {
        let n = group.orders();
        let k = group.rank();
        let grids: Vec<i64> = (0..k * k)
            .map(|c| (n[c / k] as i64).gcd(&(n[c % k] as i64)))
            .collect();
        let total: usize = grids.iter().map(|&d| d as usize).product();
        (0..total)
            .map(|mut code| {
                let mut matrix = vec![vec![Rational::zero(); k]; k];
                for (c, &d) in grids.iter().enumerate() {
                    matrix[c / k][c % k] = Rational::new((code % d as usize) as i64, d);
                    code /= d as usize;
                }
                Bicharacter {
                    group: group.clone(),
                    matrix,
                }
            })
            .collect()
    }
}
