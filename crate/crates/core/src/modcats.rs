//! Braided module categories over `Vec_G` with braiding given by a quadratic form.
//!
//! An indecomposable module category is determined here by a subgroup `H`
//! (its simples are the cosets `G/H`); a module braiding exists only when `H`
//! lies in the Müger center, and is then given by a character `χ` of `G`:
//! `σ_{M_k, g} = b(g, k)·χ(g)`.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::forms::QuadraticForm;
use crate::groups::{Character, GroupElement, RestrictedCharacter, Subgroup};
use crate::rational::Rational;
use crate::roots::UnityScalar;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BraidedModuleCat<'q> {
    form: &'q QuadraticForm,
    subgroup: Subgroup,
    character: Character,
}

impl<'q> BraidedModuleCat<'q> {
    /// The module category `M_H` with the braiding defined by `character`.
    pub fn new(form: &'q QuadraticForm, subgroup: Subgroup, character: Character) -> Result<Self> {
        if character.parent() != form.group() {
            return Err(Error::Input("character of a different group".into()));
        }
        if !module_braiding_exists(&subgroup, form)? {
            return Err(Error::Existence(format!(
                "subgroup of order {} is not contained in the Müger center",
                subgroup.order()
            )));
        }
        Ok(BraidedModuleCat {
            form,
            subgroup,
            character,
        })
    }

    /// The regular module category `Vec_G` braided by `character`.
    pub fn regular(form: &'q QuadraticForm, character: Character) -> Result<Self> {
        Self::new(form, form.group().trivial_subgroup(), character)
    }

    pub fn form(&self) -> &'q QuadraticForm {
        self.form
    }

    pub fn subgroup(&self) -> &Subgroup {
        &self.subgroup
    }

    pub fn character(&self) -> &Character {
        &self.character
    }

    pub fn is_regular(&self) -> bool {
        self.subgroup.is_trivial()
    }

    /// Coset representatives labeling the simple objects.
    pub fn simples(&self) -> Vec<GroupElement> {
        self.form
            .group()
            .coset_transversal(&self.subgroup)
            .expect("subgroup belongs to the form's group")
    }
}

/// A module braiding on `M_H` exists iff `H ≤ Z₂(G)`.
pub fn module_braiding_exists(h: &Subgroup, q: &QuadraticForm) -> Result<bool> {
    if h.parent() != q.group() {
        return Err(Error::Input("subgroup of a different group".into()));
    }
    Ok(h.is_subgroup_of(q.muger_center()))
}

/// One braided module category per character of `G`, in character-index order.
pub fn enumerate_module_braidings<'q>(
    h: &Subgroup,
    q: &'q QuadraticForm,
) -> Result<Vec<BraidedModuleCat<'q>>> {
    if !module_braiding_exists(h, q)? {
        return Err(Error::Existence(format!(
            "no module braiding: subgroup of order {} is not in the Müger center",
            h.order()
        )));
    }
    Ok(q.group()
        .characters()
        .into_iter()
        .map(|character| BraidedModuleCat {
            form: q,
            subgroup: h.clone(),
            character,
        })
        .collect())
}

/// `σ_{M_k, g} = b(g, k)·χ(g)`.
pub fn sigma_scalar(m: &BraidedModuleCat<'_>, k: &GroupElement, g: &GroupElement) -> Result<UnityScalar> {
    Ok(m.form.double_braiding(g, k)? * m.character.eval(g)?)
}

/// Schur equivalence of two braided module categories over the same form.
///
/// Decided twice: by searching for `k` with `χ1/χ2 = b(·, k)`, and by comparing
/// the restrictions of `χ1` and `χ2` to the Müger center. The two must agree.
pub fn schur_equivalent(m1: &BraidedModuleCat<'_>, m2: &BraidedModuleCat<'_>) -> Result<bool> {
    if m1.form != m2.form {
        return Err(Error::Input("braided module categories over different forms".into()));
    }
    let q = m1.form;
    let group = q.group();
    let ratio = m1.character.ratio(&m2.character)?;
    let on_generators: Vec<UnityScalar> = group
        .generators()
        .iter()
        .map(|e| ratio.eval(e))
        .collect::<Result<_>>()?;
    let mut ratio_values: Option<Vec<UnityScalar>> = None;
    let mut by_monodromy = false;
    for k in 0..group.size() {
        if !on_generators.iter().enumerate().all(|(i, &v)| v == q.b_generator(i, k)) {
            continue;
        }
        let values = match &ratio_values {
            Some(v) => v,
            None => ratio_values.insert(
                group.elements().iter().map(|g| ratio.eval(g)).collect::<Result<_>>()?,
            ),
        };
        if (0..group.size()).all(|g| values[g] == q.b_index(g, k)) {
            by_monodromy = true;
            break;
        }
    }
    let radical = q.muger_center();
    let by_restriction = m1.character.restrict(radical)? == m2.character.restrict(radical)?;
    if by_monodromy != by_restriction {
        return Err(Error::CrossCheck(format!(
            "characters {} and {}: monodromy criterion says {by_monodromy}, restriction criterion says {by_restriction}",
            m1.character.index(),
            m2.character.index()
        )));
    }
    Ok(by_monodromy)
}

/// A Schur equivalence class, labeled by the common restriction of its
/// characters to the Müger center.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SchurClass<'q> {
    pub form: &'q QuadraticForm,
    pub restricted_character: RestrictedCharacter,
}

impl SchurClass<'_> {
    /// The regular braided module category with the least character in the class.
    pub fn representative(&self) -> Result<BraidedModuleCat<'_>> {
        let chi = self.form.group().character(self.restricted_character.lift.clone())?;
        BraidedModuleCat::regular(self.form, chi)
    }
}

/// Characters of `G` modulo the image of `k ↦ b(·, k)`, one class per orbit,
/// ordered by restricted values. There are exactly `|Z₂(G)|` of them.
pub fn schur_classes(q: &QuadraticForm) -> Result<Vec<SchurClass<'_>>> {
    let group = q.group();
    let n = group.orders();
    // φ(k) as a character index: its i-th coordinate is n_i · exponent of b(e_i, k).
    let image: Vec<usize> = (0..group.size())
        .map(|k| {
            let coords: Vec<i64> = n
                .iter()
                .enumerate()
                .map(|(i, &ni)| {
                    let scaled = q.b_generator(i, k).exponent() * Rational::from_integer(ni as i64);
                    debug_assert!(scaled.is_integer());
                    scaled.to_integer()
                })
                .collect();
            group.index_of(&group.element(&coords).expect("arity matches"))
        })
        .collect();

    let radical = q.muger_center();
    let restrict = |a: usize| -> Vec<UnityScalar> {
        let a = group.element_at(a);
        radical.members().iter().map(|l| group.pairing(&a, l)).collect()
    };

    let mut orbit_of = vec![usize::MAX; group.size()];
    let mut classes: BTreeMap<Vec<UnityScalar>, GroupElement> = BTreeMap::new();
    for a in 0..group.size() {
        if orbit_of[a] != usize::MAX {
            continue;
        }
        let values = restrict(a);
        for &phi in &image {
            let member = group.add_index(a, phi);
            orbit_of[member] = a;
            if restrict(member) != values {
                return Err(Error::CrossCheck(format!(
                    "orbit of character {} is not constant on the Müger center",
                    group.element_at(a)
                )));
            }
        }
        if classes.insert(values, group.element_at(a)).is_some() {
            return Err(Error::CrossCheck(
                "two orbits restrict to the same character of the Müger center".into(),
            ));
        }
    }
    if classes.len() != radical.order() {
        return Err(Error::InvariantViolation(format!(
            "{} Schur classes for a Müger center of order {}",
            classes.len(),
            radical.order()
        )));
    }
    Ok(classes
        .into_iter()
        .map(|(values, lift)| SchurClass {
            form: q,
            restricted_character: RestrictedCharacter { lift, values },
        })
        .collect())
}

/// The regular module category carrying the same character, certified
/// Schur equivalent to `m` by equal restriction to the Müger center.
pub fn regular_representative<'q>(m: &BraidedModuleCat<'q>) -> Result<BraidedModuleCat<'q>> {
    let regular = BraidedModuleCat::regular(m.form, m.character.clone())?;
    let radical = m.form.muger_center();
    if regular.character.restrict(radical)? != m.character.restrict(radical)? {
        return Err(Error::InvariantViolation(
            "regular representative changed the restriction to the Müger center".into(),
        ));
    }
    Ok(regular)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::FiniteAbelianGroup;

    fn form(orders: &[u32], diag: &[(i64, i64)]) -> QuadraticForm {
        QuadraticForm::new(
            FiniteAbelianGroup::new(orders.to_vec()).unwrap(),
            diag.iter().map(|&(p, q)| Rational::new(p, q)).collect(),
            BTreeMap::new(),
        )
        .unwrap()
    }

    fn el(q: &QuadraticForm, r: &[i64]) -> GroupElement {
        q.group().element(r).unwrap()
    }

    fn chi(q: &QuadraticForm, r: &[i64]) -> Character {
        q.group().character(el(q, r)).unwrap()
    }

    #[test]
    fn existence_examples() {
        let z4 = form(&[4], &[(1, 4)]);
        let h = Subgroup::generated_by(z4.group(), &[el(&z4, &[2])]).unwrap();
        assert!(module_braiding_exists(&h, &z4).unwrap());
        let z4_eighth = form(&[4], &[(1, 8)]);
        assert!(!module_braiding_exists(&h, &z4_eighth).unwrap());
        assert!(module_braiding_exists(&z4_eighth.group().trivial_subgroup(), &z4_eighth).unwrap());
        let foreign = FiniteAbelianGroup::new(vec![2]).unwrap().whole();
        assert!(matches!(module_braiding_exists(&foreign, &z4), Err(Error::Input(_))));
    }

    #[test]
    fn enumerate_examples() {
        let z2 = form(&[2], &[]);
        assert_eq!(enumerate_module_braidings(&z2.group().trivial_subgroup(), &z2).unwrap().len(), 2);
        let z4 = form(&[4], &[(1, 4)]);
        let h = Subgroup::generated_by(z4.group(), &[el(&z4, &[2])]).unwrap();
        assert_eq!(enumerate_module_braidings(&h, &z4).unwrap().len(), 4);
        let z1 = form(&[1], &[]);
        assert_eq!(enumerate_module_braidings(&z1.group().whole(), &z1).unwrap().len(), 1);
        let z4_eighth = form(&[4], &[(1, 8)]);
        let h8 = Subgroup::generated_by(z4_eighth.group(), &[el(&z4_eighth, &[2])]).unwrap();
        assert!(matches!(
            enumerate_module_braidings(&h8, &z4_eighth),
            Err(Error::Existence(_))
        ));
    }

    #[test]
    fn sigma_examples() {
        let z4 = form(&[4], &[(1, 4)]);
        for a in 0..4 {
            let m = BraidedModuleCat::regular(&z4, chi(&z4, &[a])).unwrap();
            for g in 0..4 {
                let gg = el(&z4, &[g]);
                assert_eq!(
                    sigma_scalar(&m, &z4.group().zero(), &gg).unwrap(),
                    chi(&z4, &[a]).eval(&gg).unwrap()
                );
            }
        }
        let m = BraidedModuleCat::regular(&z4, chi(&z4, &[0])).unwrap();
        for k in 0..4 {
            for g in 0..4 {
                let (kk, gg) = (el(&z4, &[k]), el(&z4, &[g]));
                assert_eq!(sigma_scalar(&m, &kk, &gg).unwrap(), z4.double_braiding(&gg, &kk).unwrap());
            }
        }
        let h = Subgroup::generated_by(z4.group(), &[el(&z4, &[2])]).unwrap();
        let m = BraidedModuleCat::new(&z4, h, chi(&z4, &[0])).unwrap();
        assert_eq!(m.simples(), vec![el(&z4, &[0]), el(&z4, &[1])]);
        assert!(sigma_scalar(&m, &el(&z4, &[1]), &el(&z4, &[2])).unwrap().is_one());
    }

    #[test]
    fn schur_examples() {
        let z2 = form(&[2], &[]);
        let triv = BraidedModuleCat::regular(&z2, chi(&z2, &[0])).unwrap();
        let sign = BraidedModuleCat::regular(&z2, chi(&z2, &[1])).unwrap();
        assert!(schur_equivalent(&triv, &triv).unwrap());
        assert!(!schur_equivalent(&triv, &sign).unwrap());

        let svec = form(&[2], &[(1, 2)]);
        let triv = BraidedModuleCat::regular(&svec, chi(&svec, &[0])).unwrap();
        let sign = BraidedModuleCat::regular(&svec, chi(&svec, &[1])).unwrap();
        assert!(!schur_equivalent(&triv, &sign).unwrap());

        let semion = form(&[2], &[(1, 4)]);
        let triv = BraidedModuleCat::regular(&semion, chi(&semion, &[0])).unwrap();
        let sign = BraidedModuleCat::regular(&semion, chi(&semion, &[1])).unwrap();
        assert!(schur_equivalent(&triv, &sign).unwrap());

        let other = BraidedModuleCat::regular(&z2, chi(&z2, &[0])).unwrap();
        assert!(matches!(schur_equivalent(&triv, &other), Err(Error::Input(_))));
    }

    #[test]
    fn class_count_examples() {
        assert_eq!(schur_classes(&form(&[2], &[(1, 4)])).unwrap().len(), 1);
        assert_eq!(schur_classes(&form(&[2], &[(1, 2)])).unwrap().len(), 2);
        let q = form(&[4], &[(1, 4)]);
        let z4 = schur_classes(&q).unwrap();
        assert_eq!(z4.len(), 2);
        assert!(z4[0].restricted_character.is_trivial());
    }

    #[test]
    fn regular_representative_examples() {
        let z4 = form(&[4], &[(1, 4)]);
        let regular = BraidedModuleCat::regular(&z4, chi(&z4, &[3])).unwrap();
        assert_eq!(regular_representative(&regular).unwrap(), regular);

        let h = Subgroup::generated_by(z4.group(), &[el(&z4, &[2])]).unwrap();
        let m = BraidedModuleCat::new(&z4, h, chi(&z4, &[1])).unwrap();
        let r = regular_representative(&m).unwrap();
        assert!(r.is_regular());
        assert_eq!(r.character(), &chi(&z4, &[1]));
        assert!(schur_equivalent(&r, &m).unwrap());
    }

    #[test]
    fn constancy_across_simples() {
        let z4 = form(&[4], &[(1, 4)]);
        let g = z4.group();
        let radical = z4.muger_center();
        for h in radical_subgroups(&z4) {
            for m in enumerate_module_braidings(&h, &z4).unwrap() {
                for central in radical.members() {
                    for k in g.elements() {
                        for x in h.members() {
                            let k2 = g.add(&k, x).unwrap();
                            assert_eq!(
                                sigma_scalar(&m, &k, central).unwrap(),
                                sigma_scalar(&m, &k2, central).unwrap()
                            );
                        }
                    }
                }
            }
        }
    }

    fn radical_subgroups(q: &QuadraticForm) -> Vec<Subgroup> {
        let radical = q.muger_center();
        q.group()
            .subgroups()
            .into_iter()
            .filter(|h| h.is_subgroup_of(radical))
            .collect()
    }
}
