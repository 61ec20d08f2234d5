//! Acceptance criteria. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails.

use std::collections::BTreeMap;
use std::time::Instant;

use fusion2s::scan::abelian_groups;
use fusion2s::{run, scan_forms};
use fusion2s_core::center::{center_s_matrix, embed_muger, CenterSMatrix};
use fusion2s_core::groups::DEFAULT_MAX_GROUP_SIZE;
use fusion2s_core::modcats::{enumerate_module_braidings, schur_classes, schur_equivalent, sigma_scalar};
use fusion2s_core::roots::{matrices_equal_up_to_perm, orthogonality_defect};
use fusion2s_core::smatrix::{
    char_table, st_matrix_direct, st_matrix_via_center, verify_theorem, ORTHOGONALITY_TOLERANCE,
};
use fusion2s_core::{
    Bicharacter, FiniteAbelianGroup, Flavor, Label, LabeledUnityMatrix, QuadraticForm, Rational,
    Result, UnityScalar, Verdict,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const SCAN_BOUND: usize = 16;
const EXHAUSTIVE_BICHARACTER_BOUND: usize = 8;
const RANDOM_BICHARACTER_BOUND: usize = 64;
const RANDOM_BICHARACTERS: usize = 24;
const CENTER_NONDEGENERACY_BOUND: usize = 16;

type Check = std::result::Result<String, String>;

fn fail<T: std::fmt::Display>(what: T) -> String {
    what.to_string()
}

/// Largest orthogonality defect seen, shared by the criteria that produce matrices.
#[derive(Default)]
struct Defects {
    worst: f64,
    count: usize,
}

impl Defects {
    fn record(&mut self, m: &LabeledUnityMatrix) -> Result<()> {
        let d = orthogonality_defect(m)?;
        self.worst = self.worst.max(d);
        self.count += 1;
        Ok(())
    }
}

fn criterion_1(forms: &[QuadraticForm], defects: &mut Defects) -> Check {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let bound = SCAN_BOUND.to_string();
    let code = run(["fusion2s", "scan", "--max-size", &bound], &mut out, &mut err);
    if code != 0 {
        return Err(format!("scan exited {code}: {}", String::from_utf8_lossy(&err)));
    }
    let lines = out.iter().filter(|&&b| b == b'\n').count();
    if lines != forms.len() {
        return Err(format!("scan reported {lines} instances, expected {}", forms.len()));
    }
    for q in forms {
        let r = verify_theorem(q, false).map_err(fail)?;
        let w = r.direct_witness.as_ref().ok_or_else(|| format!("no witness for {q}"))?;
        if r.verdict != Verdict::Pass || !w.relates(&r.char_table, &r.st_direct) {
            return Err(format!("{q}: S̃ differs from the character table"));
        }
        defects.record(&r.st_direct).map_err(fail)?;
        defects.record(&r.char_table).map_err(fail)?;
    }
    Ok(format!("{} instances on groups of order ≤ {SCAN_BOUND}", forms.len()))
}

/// Every bicharacter on the invariant-factor groups of order ≤ 8, plus seeded
/// random bicharacters on larger groups.
fn oracle_instances() -> Vec<Bicharacter> {
    let mut out = Vec::new();
    for orders in abelian_groups(EXHAUSTIVE_BICHARACTER_BOUND) {
        out.extend(Bicharacter::enumerate(&FiniteAbelianGroup::new(orders).unwrap()));
    }
    let larger: Vec<Vec<u32>> = abelian_groups(RANDOM_BICHARACTER_BOUND)
        .into_iter()
        .filter(|o| o.iter().product::<u32>() as usize > EXHAUSTIVE_BICHARACTER_BOUND)
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for _ in 0..RANDOM_BICHARACTERS {
        let orders = larger[rng.gen_range(0..larger.len())].clone();
        let matrix = orders
            .iter()
            .map(|&ni| {
                orders
                    .iter()
                    .map(|&nj| {
                        let d = num_integer::gcd(ni, nj) as i64;
                        Rational::new(rng.gen_range(0..d), d)
                    })
                    .collect()
            })
            .collect();
        out.push(Bicharacter::new(FiniteAbelianGroup::new(orders).unwrap(), matrix).unwrap());
    }
    out
}

fn criterion_2(instances: &[Bicharacter], defects: &mut Defects) -> Check {
    let mut largest = 0;
    for beta in instances {
        let q = beta.quadratic_form().map_err(fail)?;
        let direct = st_matrix_direct(&q).map_err(fail)?;
        let center = st_matrix_via_center(beta).map_err(fail)?;
        let radical = q.muger_center().order();
        if center.nrows() != radical {
            return Err(format!("{q}: {} deduplicated rows, |Z₂| = {radical}", center.nrows()));
        }
        let w = matrices_equal_up_to_perm(&direct, &center)
            .ok_or_else(|| format!("{q}: center route differs from the direct route"))?;
        if !w.relates(&direct, &center) {
            return Err(format!("{q}: invalid witness"));
        }
        defects.record(&center).map_err(fail)?;
        largest = largest.max(q.group().size());
    }
    Ok(format!("{} bicharacters, largest group order {largest}", instances.len()))
}

/// `e^{2πi⟨j,k⟩}` on `Z_{n1} × … × Z_{nk}`, built from coordinates.
fn expected_table(orders: &[u32]) -> LabeledUnityMatrix {
    let g = FiniteAbelianGroup::new(orders.to_vec()).unwrap();
    let labels: Vec<Label> = g.elements().into_iter().map(Label::Element).collect();
    let rows: Vec<Label> = g
        .elements()
        .into_iter()
        .map(Label::Character)
        .collect();
    LabeledUnityMatrix::from_fn(rows, labels, |i, j| {
        let a = g.element_at(i);
        let b = g.element_at(j);
        let exponent = a
            .residues()
            .iter()
            .zip(b.residues())
            .zip(orders)
            .map(|((&x, &y), &n)| Rational::new(x as i64 * y as i64, n as i64))
            .sum();
        UnityScalar::from_exponent(exponent)
    })
    .unwrap()
}

fn form(orders: &[u32], diag: &[&str]) -> QuadraticForm {
    let diag: Vec<String> = diag.iter().map(|s| s.to_string()).collect();
    QuadraticForm::from_strings(FiniteAbelianGroup::new(orders.to_vec()).unwrap(), &diag, &BTreeMap::new())
        .unwrap()
}

fn fixture(q: &QuadraticForm, expected: &LabeledUnityMatrix, flavor: Option<Flavor>) -> Check {
    let st = st_matrix_direct(q).map_err(fail)?;
    if matrices_equal_up_to_perm(expected, &st).is_none() {
        return Err(format!("{q}: unexpected S̃"));
    }
    if let Some(f) = flavor {
        let got = q.classify().map_err(fail)?.flavor;
        if got != f {
            return Err(format!("{q}: flavor {got}, expected {f}"));
        }
    }
    Ok(String::new())
}

fn criterion_3() -> Check {
    for n in 1..=8u32 {
        fixture(&QuadraticForm::trivial(FiniteAbelianGroup::new(vec![n]).unwrap()), &expected_table(&[n]), None)?;
    }
    fixture(&form(&[2], &["1/2"]), &expected_table(&[2]), Some(Flavor::SuperTannakian))?;
    for r in ["1/4", "3/4"] {
        fixture(&form(&[2], &[r]), &expected_table(&[1]), None)?;
    }
    fixture(&form(&[4], &["1/4"]), &expected_table(&[2]), Some(Flavor::Tannakian))?;
    Ok("trivial Z_1..Z_8, sVec, both semions, Z_4 with r = 1/4".into())
}

fn criterion_4(forms: &[QuadraticForm]) -> Check {
    let mut pairs = 0usize;
    for q in forms {
        let classes = schur_classes(q).map_err(fail)?;
        let radical = q.muger_center();
        if classes.len() != radical.order() {
            return Err(format!("{q}: {} classes, |Z₂| = {}", classes.len(), radical.order()));
        }
        let cats = enumerate_module_braidings(&q.group().trivial_subgroup(), q).map_err(fail)?;
        for m1 in &cats {
            for m2 in &cats {
                schur_equivalent(m1, m2).map_err(|e| format!("{q}: {e}"))?;
                pairs += 1;
            }
        }
    }
    Ok(format!("{} forms, {pairs} character pairs", forms.len()))
}

fn multiplicative(s: &CenterSMatrix, beta: &Bicharacter) -> std::result::Result<usize, String> {
    let q = beta.quadratic_form().map_err(fail)?;
    let group = q.group();
    let radical = q.muger_center();
    let columns = radical
        .members()
        .iter()
        .map(|l| embed_muger(l, beta))
        .collect::<Result<Vec<_>>>()
        .map_err(fail)?;
    let index: BTreeMap<_, usize> = radical
        .members()
        .iter()
        .enumerate()
        .map(|(i, l)| (l.clone(), i))
        .collect();
    let mut checks = 0;
    for z in s.simples() {
        let row: Vec<UnityScalar> = columns.iter().map(|t| s.entry_of(z, t)).collect();
        for (i, a) in radical.members().iter().enumerate() {
            for (j, b) in radical.members().iter().enumerate() {
                let sum = index[&group.add(a, b).map_err(fail)?];
                if row[sum] != row[i] * row[j] {
                    return Err(format!("{q}: row {} not multiplicative at {a} + {b}", z.label()));
                }
                checks += 1;
            }
        }
    }
    Ok(checks)
}

fn criterion_5(instances: &[Bicharacter]) -> Check {
    let mut centers: BTreeMap<Vec<u32>, CenterSMatrix> = BTreeMap::new();
    let mut checks = 0;
    for beta in instances {
        let orders = beta.group().orders().to_vec();
        let s = centers
            .entry(orders)
            .or_insert_with(|| center_s_matrix(beta.group()).unwrap());
        checks += multiplicative(s, beta)?;
    }
    Ok(format!("{} oracle instances, {checks} products", instances.len()))
}

fn criterion_6(forms: &[QuadraticForm]) -> Check {
    let mut checks = 0usize;
    // Constancy depends on the form only through b, so one form per b suffices
    // for the expensive subgroup sweep.
    let mut seen = std::collections::BTreeSet::new();
    for q in forms {
        let b: Vec<UnityScalar> = (0..q.group().size())
            .flat_map(|g| {
                let g = q.group().element_at(g);
                q.group()
                    .elements()
                    .into_iter()
                    .map(move |h| (g.clone(), h))
            })
            .map(|(g, h)| q.double_braiding(&g, &h).unwrap())
            .collect();
        if !seen.insert((q.group().orders().to_vec(), b)) {
            continue;
        }
        let radical = q.muger_center();
        let elements = q.group().elements();
        for h in q.group().subgroups() {
            if !h.is_subgroup_of(radical) {
                continue;
            }
            for m in enumerate_module_braidings(&h, q).map_err(fail)? {
                for g in radical.members() {
                    let first = sigma_scalar(&m, &elements[0], g).map_err(fail)?;
                    for k in &elements {
                        if sigma_scalar(&m, k, g).map_err(fail)? != first {
                            return Err(format!("{q}: σ at {g} depends on the simple {k}"));
                        }
                        checks += 1;
                    }
                }
            }
        }
    }
    Ok(format!("{} distinct braidings, {checks} evaluations", seen.len()))
}

fn criterion_7(defects: &Defects) -> Check {
    if defects.worst >= ORTHOGONALITY_TOLERANCE {
        return Err(format!("worst orthogonality defect {:e}", defects.worst));
    }
    let mut worst_center: f64 = 0.0;
    let mut groups = 0;
    for orders in abelian_groups(CENTER_NONDEGENERACY_BOUND) {
        let g = FiniteAbelianGroup::new(orders.clone()).unwrap();
        let d = orthogonality_defect(&center_s_matrix(&g).map_err(fail)?.to_matrix()).map_err(fail)?;
        worst_center = worst_center.max(d);
        groups += 1;
        let table = char_table(&g.whole()).map_err(fail)?;
        worst_center = worst_center.max(orthogonality_defect(&table.table).map_err(fail)?);
    }
    if worst_center >= ORTHOGONALITY_TOLERANCE {
        return Err(format!("center S-matrix defect {worst_center:e}"));
    }
    Ok(format!(
        "{} matrices with defect ≤ {:.1e}; {groups} center S-matrices with defect ≤ {:.1e}",
        defects.count, defects.worst, worst_center
    ))
}

fn main() {
    let start = Instant::now();
    let forms = scan_forms(SCAN_BOUND, DEFAULT_MAX_GROUP_SIZE).expect("scan forms enumerate");
    let oracle = oracle_instances();
    let mut defects = Defects::default();

    let mut results: Vec<(&str, Check)> = Vec::new();
    let mut timed = |name: &'static str, check: &mut dyn FnMut() -> Check| {
        let t = Instant::now();
        let r = check().map(|s| format!("{s} ({:.1}s)", t.elapsed().as_secs_f64()));
        results.push((name, r));
    };
    timed("1 S̃ equals the Müger-center character table", &mut || criterion_1(&forms, &mut defects));
    timed("2 center route equals direct route", &mut || criterion_2(&oracle, &mut defects));
    timed("3 exact fixtures", &mut criterion_3);
    timed("4 Schur class count and criteria agreement", &mut || criterion_4(&forms));
    timed("5 multiplicativity on Müger columns", &mut || criterion_5(&oracle));
    timed("6 constancy across simples", &mut || criterion_6(&forms));
    timed("7 numerical certificates", &mut || criterion_7(&defects));

    let mut failed = 0;
    for (name, r) in &results {
        match r {
            Ok(detail) => println!("PASS criterion {name}: {detail}"),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {name}: {why}");
            }
        }
    }
    println!("acceptance finished in {:.1}s", start.elapsed().as_secs_f64());
    if failed > 0 {
        std::process::exit(1);
    }
}
