//! Enumeration of groups and quadratic forms for batch certification.

use std::collections::BTreeSet;

use fusion2s_core::{FiniteAbelianGroup, QuadraticForm, Rational, Result, UnityScalar};

/// Invariant-factor lists `n_1 | n_2 | … | n_k` (all `n_i ≥ 2`) with product at
/// most `max_size`, preceded by the trivial group `[1]`. One list per
/// isomorphism class, ordered by group order and then lexicographically.
pub fn abelian_groups(max_size: usize) -> Vec<Vec<u32>> {
    fn extend(prefix: &mut Vec<u32>, product: usize, max: usize, out: &mut Vec<Vec<u32>>) {
        if !prefix.is_empty() {
            out.push(prefix.clone());
        }
        let last = prefix.last().copied().unwrap_or(1) as usize;
        let mut next = if prefix.is_empty() { 2 } else { last };
        while product * next <= max {
            if next % last == 0 {
                prefix.push(next as u32);
                extend(prefix, product * next, max, out);
                prefix.pop();
            }
            next += if prefix.is_empty() { 1 } else { last };
        }
    }
    let mut out = vec![vec![1]];
    if max_size == 0 {
        return Vec::new();
    }
    extend(&mut Vec::new(), 1, max_size, &mut out);
    out.sort_by_key(|o| (o.iter().map(|&n| n as usize).product::<usize>(), o.clone()));
    out
}

/// Every quadratic form on `group`, from the admissible coefficient grids
/// (`1/2n` or `1/n` on the diagonal, `1/gcd` off it), deduplicated by values.
pub fn forms_on(group: &FiniteAbelianGroup) -> Result<Vec<QuadraticForm>> {
    let n = group.orders();
    let k = group.rank();
    let mut slots: Vec<((usize, usize), i64)> = Vec::new();
    for i in 0..k {
        let ni = n[i] as i64;
        slots.push(((i, i), if ni % 2 == 0 { 2 * ni } else { ni }));
    }
    for i in 0..k {
        for j in i + 1..k {
            slots.push(((i, j), num_integer::gcd(n[i] as i64, n[j] as i64)));
        }
    }
    let total: usize = slots.iter().map(|s| s.1 as usize).product();
    let mut seen: BTreeSet<Vec<UnityScalar>> = BTreeSet::new();
    let mut forms = Vec::new();
    for mut code in 0..total {
        let mut diag = vec![Rational::from_integer(0); k];
        let mut offdiag = std::collections::BTreeMap::new();
        for &((i, j), d) in &slots {
            let r = Rational::new((code % d as usize) as i64, d);
            code /= d as usize;
            if i == j {
                diag[i] = r;
            } else {
                offdiag.insert((i, j), r);
            }
        }
        let q = QuadraticForm::new(group.clone(), diag, offdiag)?;
        if seen.insert(q.values().to_vec()) {
            forms.push(q);
        }
    }
    Ok(forms)
}
