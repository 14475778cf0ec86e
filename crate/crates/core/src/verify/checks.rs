use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::names;
use super::{CheckReport, Reports};
use crate::error::Result;
use crate::invariants::{highest_lyu_via_graph, multiplicities_from_dual_betti, LocalCohomology, LyubeznikTable};
use crate::linalg::{Field, FieldSpec};
use crate::monomial::{MonomialIdeal, PolynomialRing};
use crate::simplicial::{hochster_betti, SimplicialComplex};
use crate::sqfree::{
    dual_complex, ext_all, ext_dims_at, koszul_slice, koszul_tor_all, koszul_tor_dim_at, SquarefreeModule,
};
use crate::subset::Subset;
use crate::with_field;

/// Everything the per-complex checks need, computed once per field.
struct Analysis<F: Field> {
    delta: SimplicialComplex,
    field: FieldSpec,
    lc: LocalCohomology<F>,
    faces: Vec<FaceData<F>>,
}

struct FaceData<F: Field> {
    face: Subset,
    graded: Result<LyubeznikTable>,
    /// Local cohomology of the link on the vertices outside the face.
    link: LocalCohomology<F>,
    direct: LyubeznikTable,
    graph_components: usize,
}

impl<F: Field> Analysis<F> {
    fn new(f: F, delta: &SimplicialComplex) -> Result<Self> {
        let field = f.spec();
        let lc = LocalCohomology::new(f.clone(), delta)?;
        let mut faces = Vec::new();
        for face in delta.faces() {
            let link = delta.link(face)?.compress(face.complement(delta.n()))?;
            let link_lc = LocalCohomology::new(f.clone(), &link)?;
            faces.push(FaceData {
                face,
                graded: lc.graded_table(face),
                direct: link_lc.table(),
                link: link_lc,
                graph_components: highest_lyu_via_graph(&link)?,
            });
        }
        Ok(Analysis { delta: delta.clone(), field, lc, faces })
    }

    fn describe(&self) -> String {
        format!("{} over {}", self.delta, self.field)
    }

    fn describe_face(&self, face: Subset) -> String {
        format!("{} over {} at face {}", self.delta, self.field, face)
    }
}

fn with_analysis(
    delta: &SimplicialComplex,
    field: FieldSpec,
    name: &str,
    run: impl FnOnce(&mut CheckReport, AnyAnalysis<'_>),
) -> CheckReport {
    let mut report = CheckReport::new(name);
    with_field!(field, |f| match Analysis::new(f, delta) {
        Ok(a) => run(&mut report, AnyAnalysis::from(&a)),
        Err(e) => {
            report.instances_run += 1;
            report.fail(format!("{delta} over {field}"), "a nonvoid complex", e);
        }
    });
    report
}

/// Field-erased view of an [`Analysis`], so that check bodies are written
/// once.
struct AnyAnalysis<'a> {
    describe: String,
    faces: Vec<FaceView<'a>>,
    global: LyubeznikTable,
    bound: usize,
    iterated_max: usize,
    multiplicities: crate::invariants::MultiplicityTable,
    n: usize,
    _delta: &'a SimplicialComplex,
}

struct FaceView<'a> {
    face: Subset,
    describe: String,
    graded: &'a Result<LyubeznikTable>,
    direct: &'a LyubeznikTable,
    graph_components: usize,
    multiplicities: crate::invariants::MultiplicityTable,
}

impl<'a, F: Field> From<&'a Analysis<F>> for AnyAnalysis<'a> {
    fn from(a: &'a Analysis<F>) -> Self {
        // largest graded component of any Ext(Ext(K[Delta], omega), omega)
        let mut iterated_max = 0;
        for e in a.lc.exts() {
            for tau in e.down_closure() {
                iterated_max = iterated_max.max(ext_dims_at(e, tau).into_iter().max().unwrap_or(0));
            }
        }
        AnyAnalysis {
            describe: a.describe(),
            faces: a
                .faces
                .iter()
                .map(|fd| FaceView {
                    face: fd.face,
                    describe: a.describe_face(fd.face),
                    graded: &fd.graded,
                    direct: &fd.direct,
                    graph_components: fd.graph_components,
                    multiplicities: fd.link.multiplicities(),
                })
                .collect(),
            global: a.lc.table(),
            bound: a.lc.bound_b(),
            iterated_max,
            multiplicities: a.lc.multiplicities(),
            n: a.delta.n(),
            _delta: &a.delta,
        }
    }
}

fn localization_consistency(r: &mut CheckReport, a: &AnyAnalysis<'_>) {
    r.instances_run += 1;
    for fv in &a.faces {
        match fv.graded {
            Ok(t) => r.expect_eq(|| fv.describe.clone(), fv.direct, t),
            Err(e) => r.fail(&fv.describe, format!("{:?}", fv.direct), e),
        }
    }
}

fn highest_vs_graph(r: &mut CheckReport, a: &AnyAnalysis<'_>) {
    r.instances_run += 1;
    for fv in &a.faces {
        r.expect_eq(|| fv.describe.clone(), fv.graph_components, fv.direct.highest());
        if let Ok(t) = fv.graded {
            r.expect_eq(|| fv.describe.clone(), fv.graph_components, t.highest());
        }
    }
}

fn bound(r: &mut CheckReport, a: &AnyAnalysis<'_>) {
    r.instances_run += 1;
    for fv in &a.faces {
        let largest = fv.direct.entries().iter().flatten().copied().max().unwrap_or(0);
        if largest > a.bound {
            r.fail(&fv.describe, format!("every entry <= B = {}", a.bound), format!("entry {largest}"));
        }
    }
    if a.iterated_max > a.bound {
        r.fail(
            &a.describe,
            format!("graded Ext components <= B = {}", a.bound),
            format!("component of dimension {}", a.iterated_max),
        );
    }
}

/// `lambda^0_{j-h}(loc) <= lambda^0_j` and `gamma_{i-h,j}(loc) <= gamma_{i,j}`
/// with `h = #face`, the number of variables that become units.
fn gral_localization(r: &mut CheckReport, a: &AnyAnalysis<'_>) {
    r.instances_run += 1;
    let g = &a.multiplicities;
    let n = a.n as isize;
    for fv in &a.faces {
        let h = fv.face.len() as isize;
        let l = &fv.multiplicities;
        for j in 0..=n {
            if l.lambda0(j - h) > g.lambda0(j) {
                r.fail(&fv.describe, format!("lambda0_{} <= {}", j - h, g.lambda0(j)), l.lambda0(j - h));
            }
            for i in 0..=n {
                if l.gamma(i - h, j) > g.gamma(i, j) {
                    r.fail(&fv.describe, format!("gamma_{},{} <= {}", i - h, j, g.gamma(i, j)), l.gamma(i - h, j));
                }
            }
        }
    }
}

/// Violations of the localization inequalities with `h = d - d_local` and
/// both `gamma` indices shifted, as `(lambda0, gamma)` counts.
pub fn shifted_localization_violations(delta: &SimplicialComplex, field: FieldSpec) -> Result<(usize, usize)> {
    with_field!(field, |f| {
        let a = Analysis::new(f, delta)?;
        let g = a.lc.multiplicities();
        let d = delta.krull_dim().unwrap_or(0) as isize;
        let n = delta.n() as isize;
        let (mut l0, mut gm) = (0, 0);
        for fd in &a.faces {
            let h = d - fd.direct.d() as isize;
            let l = fd.link.multiplicities();
            for j in 0..=n {
                l0 += (l.lambda0(j - h) > g.lambda0(j)) as usize;
                for i in 0..=n {
                    gm += (l.gamma(i - h, j - h) > g.gamma(i, j)) as usize;
                }
            }
        }
        Ok((l0, gm))
    })
}

fn structure<F: Field>(reports: &mut Reports, a: &Analysis<F>) {
    let f = a.field_elem();
    let describe = a.describe();
    let delta = &a.delta;
    let n = delta.n();
    let module = SquarefreeModule::from_complex(f.clone(), delta);
    let exts = a.lc.exts();

    let r = reports.get(names::D_SQUARED);
    r.instances_run += 1;
    let mut complexes_ok =
        dual_complex(&module).check().is_ok() && exts.iter().all(|e| dual_complex(e).check().is_ok());
    for sigma in Subset::full(n).subsets() {
        let alpha: Vec<u32> = (0..n).map(|k| sigma.contains(k) as u32).collect();
        let diffs = koszul_slice(&module, &alpha);
        complexes_ok &= diffs.windows(2).all(|w| w[0].mul(&f, &w[1]).map(|p| p.is_zero(&f)).unwrap_or(false));
    }
    if !complexes_ok {
        r.fail(&describe, "d o d = 0", "nonzero composite");
    }

    let second: Vec<Vec<SquarefreeModule<F>>> = exts.iter().map(ext_all).collect();
    let r = reports.get(names::COMMUTING_SQUARES);
    r.instances_run += 1;
    let all = core::iter::once(&module).chain(exts.iter()).chain(second.iter().flatten());
    for (k, m) in all.enumerate() {
        if let Err(e) = m.check_commuting_squares() {
            r.fail(format!("{describe}, module #{k}"), "commuting squares", e);
        }
    }

    let r = reports.get(names::KOSZUL_VS_HOCHSTER);
    r.instances_run += 1;
    let tors = koszul_tor_all(&module);
    for sigma in Subset::full(n).subsets() {
        for (i, tor) in tors.iter().enumerate() {
            let koszul = tor.per_degree.get(&sigma).copied().unwrap_or(0);
            let hochster = hochster_betti(delta, i, sigma, a.field);
            if koszul != hochster {
                r.fail(format!("{describe}, Tor_{i} in degree {sigma}"), hochster, koszul);
            }
        }
    }

    let r = reports.get(names::NON_SQUAREFREE_TOR);
    r.instances_run += 1;
    for sigma in Subset::full(n).subsets() {
        let Some(k) = sigma.iter().next() else { continue };
        let mut alpha: Vec<u32> = (0..n).map(|v| sigma.contains(v) as u32).collect();
        alpha[k] = 2;
        for i in 0..=n {
            let v = koszul_tor_dim_at(&module, i, &alpha);
            if v != 0 {
                r.fail(format!("{describe}, Tor_{i} in degree {alpha:?}"), 0, v);
            }
        }
    }

    let r = reports.get(names::M_TABLE_PATHS);
    r.instances_run += 1;
    match multiplicities_from_dual_betti(delta, a.field) {
        Ok(betti) => r.expect_eq(|| describe.clone(), betti.m, a.lc.multiplicities().m),
        Err(e) => r.fail(&describe, "dual Betti table", e),
    }

    // l_sigma(Ext^{n-i}_S(M, omega)) = Ext^{#sigma-(i-#sigma^c)}_{K[sigma]}(l_sigma M, omega)
    let r = reports.get(names::LINK_FUNCTOR_EXT);
    r.instances_run += 1;
    for sigma in Subset::full(n).subsets() {
        let outside = n - sigma.len();
        let local = module.link_functor(sigma).expect("sigma lies in [n]");
        let local_exts = ext_all(&local);
        for (i, e) in exts.iter().enumerate() {
            let lhs = e.link_functor(sigma).expect("sigma lies in [n]");
            let rhs = if i >= outside { local_exts[i - outside].dims().clone() } else { Default::default() };
            r.expect_eq(|| format!("{describe}, sigma {sigma}, i = {i}"), &rhs, lhs.dims());
        }
    }

    let r = reports.get(names::LINK_FUNCTOR_COMPLEX);
    r.instances_run += 1;
    for sigma in Subset::full(n).subsets() {
        let local = module.link_functor(sigma).expect("sigma lies in [n]");
        let rest = sigma.complement(n);
        let ok = if delta.is_face(rest) {
            let lk = delta.link(rest).and_then(|l| l.compress(sigma)).expect("rest is a face");
            local.same_data(&SquarefreeModule::from_complex(f.clone(), &lk))
        } else {
            local.is_zero()
        };
        if !ok {
            r.fail(format!("{describe}, sigma {sigma}"), "K[lk sigma^c]", format!("{:?}", local.dims()));
        }
    }
}

impl<F: Field> Analysis<F> {
    fn field_elem(&self) -> F {
        self.lc.field().clone()
    }
}

pub fn check_localization_consistency(delta: &SimplicialComplex, field: FieldSpec) -> CheckReport {
    with_analysis(delta, field, names::LOCALIZATION_CONSISTENCY, |r, a| localization_consistency(r, &a))
}

pub fn check_highest_vs_graph(delta: &SimplicialComplex, field: FieldSpec) -> CheckReport {
    with_analysis(delta, field, names::HIGHEST_VS_GRAPH, |r, a| highest_vs_graph(r, &a))
}

pub fn check_bound(delta: &SimplicialComplex, field: FieldSpec) -> CheckReport {
    with_analysis(delta, field, names::BOUND, |r, a| bound(r, &a))
}

pub fn check_gral_inequalities_localization(delta: &SimplicialComplex, field: FieldSpec) -> CheckReport {
    with_analysis(delta, field, names::GRAL_LOCALIZATION, |r, a| gral_localization(r, &a))
}

/// All structural checks (complexes, modules, Koszul, multiplicities, link
/// functor) on one complex.
pub fn check_structure(delta: &SimplicialComplex, field: FieldSpec) -> Reports {
    let mut reports = Reports::new();
    with_field!(field, |f| match Analysis::new(f, delta) {
        Ok(a) => structure(&mut reports, &a),
        Err(e) => {
            let r = reports.get(names::D_SQUARED);
            r.instances_run += 1;
            r.fail(format!("{delta} over {field}"), "a nonvoid complex", e);
        }
    });
    reports
}

/// `I' = I_Delta x_{n+1}` has a trivial table, and its localization at the
/// face `{n+1}` has the table of `Delta`.
pub fn check_cone_trick(delta: &SimplicialComplex, field: FieldSpec) -> CheckReport {
    let mut r = CheckReport::new(names::CONE_TRICK);
    r.instances_run += 1;
    let describe = format!("{delta} over {field}");
    let outcome = (|| -> Result<(LyubeznikTable, LyubeznikTable, LyubeznikTable)> {
        let ideal = MonomialIdeal::from_complex(PolynomialRing::standard(delta.n()), delta)?;
        let cone = ideal.cone_with_hyperplane()?.stanley_reisner()?;
        let apex = Subset::singleton(delta.n());
        with_field!(field, |f| {
            let lc = LocalCohomology::new(f, &cone)?;
            Ok((lc.table(), lc.table_at_face(apex)?, LocalCohomology::new(f, delta)?.table()))
        })
    })();
    match outcome {
        Ok((cone_table, localized, original)) => {
            if !cone_table.is_trivial() {
                r.fail(&describe, "trivial cone table", format!("{cone_table:?}"));
            }
            r.expect_eq(|| describe.clone(), original, localized);
        }
        Err(e) => r.fail(&describe, "cone computation", e),
    }
    r
}

/// `lambda_{d,d}` agrees across the given fields.
pub fn check_field_independence(delta: &SimplicialComplex, fields: &[FieldSpec]) -> CheckReport {
    let mut r = CheckReport::new(names::FIELD_INDEPENDENCE);
    r.instances_run += 1;
    let highest: Vec<Result<usize>> = fields
        .iter()
        .map(|&field| with_field!(field, |f| Ok(LocalCohomology::new(f, delta)?.table().highest())))
        .collect();
    if highest.windows(2).any(|w| w[0] != w[1]) {
        r.fail(format!("{delta}"), "one value of lambda_{d,d}", format!("{highest:?}"));
    }
    r
}

/// Every check that takes a complex, sharing one computation per field.
pub fn check_complex(delta: &SimplicialComplex, fields: &[FieldSpec]) -> Reports {
    let mut reports = Reports::new();
    if fields.is_empty() {
        return reports;
    }
    let mut highest = Vec::new();
    for &field in fields {
        with_field!(field, |f| match Analysis::new(f, delta) {
            Ok(a) => {
                let view = AnyAnalysis::from(&a);
                localization_consistency(reports.get(names::LOCALIZATION_CONSISTENCY), &view);
                highest_vs_graph(reports.get(names::HIGHEST_VS_GRAPH), &view);
                bound(reports.get(names::BOUND), &view);
                gral_localization(reports.get(names::GRAL_LOCALIZATION), &view);
                highest.push(Ok(view.global.highest()));
                structure(&mut reports, &a);
            }
            Err(e) => {
                let r = reports.get(names::LOCALIZATION_CONSISTENCY);
                r.instances_run += 1;
                r.fail(format!("{delta} over {field}"), "a nonvoid complex", &e);
                highest.push(Err(e));
            }
        });
        reports.get(names::CONE_TRICK).merge(check_cone_trick(delta, field));
    }
    let r = reports.get(names::FIELD_INDEPENDENCE);
    r.instances_run += 1;
    if highest.windows(2).any(|w| w[0] != w[1]) {
        r.fail(format!("{delta}"), "one value of lambda_{d,d}", format!("{highest:?}"));
    }
    reports
}

/// `lambda_{i-h,j-h}(S/sqrt I) = lambda_{i,j}(S~/I~)`.
pub fn check_polarization_theorem(ideal: &MonomialIdeal, field: FieldSpec) -> CheckReport {
    let mut reports = Reports::new();
    ideal_checks(ideal, field, &mut reports);
    let mut r = CheckReport::new(names::POLARIZATION_THEOREM);
    r.merge(reports.get(names::POLARIZATION_THEOREM).clone());
    r
}

/// `lambda^0_{j-h}(S/sqrt I) <= lambda^0_j(S~/I~)` and
/// `gamma_{i-h,j}(S/sqrt I) <= gamma_{i,j}(S~/I~)`.
pub fn check_gral_inequalities_polarization(ideal: &MonomialIdeal, field: FieldSpec) -> CheckReport {
    let mut reports = Reports::new();
    ideal_checks(ideal, field, &mut reports);
    let mut r = CheckReport::new(names::GRAL_POLARIZATION);
    r.merge(reports.get(names::GRAL_POLARIZATION).clone());
    r
}

/// Components of the Hochster-Huneke graphs of `sqrt I` and of `I~` agree.
pub fn check_polarization_hh_graph(ideal: &MonomialIdeal) -> CheckReport {
    let mut r = CheckReport::new(names::POLARIZATION_HH_GRAPH);
    r.instances_run += 1;
    let pol = ideal.polarize();
    let small = ideal.radical().stanley_reisner().and_then(|d| highest_lyu_via_graph(&d));
    let big = pol.ideal.stanley_reisner().and_then(|d| highest_lyu_via_graph(&d));
    r.expect_eq(|| format!("{ideal}"), small, big);
    r
}

fn ideal_checks(ideal: &MonomialIdeal, field: FieldSpec, reports: &mut Reports) {
    let describe = format!("{ideal} over {field}");
    let pol = ideal.polarize();
    let h = pol.height_shift as isize;
    let result = with_field!(field, |f| (|| -> Result<()> {
        let small = LocalCohomology::new(f, &ideal.radical().stanley_reisner()?)?;
        let big = LocalCohomology::new(f, &pol.ideal.stanley_reisner()?)?;
        let (t, big_t) = (small.table(), big.table());

        let r = reports.get(names::POLARIZATION_THEOREM);
        r.instances_run += 1;
        let d = big_t.d() as isize;
        let shifted: Vec<Vec<usize>> = (0..=d).map(|i| (0..=d).map(|j| t.get(i - h, j - h)).collect()).collect();
        r.expect_eq(|| describe.clone(), (t.d() + pol.height_shift, shifted), (big_t.d(), big_t.entries().to_vec()));

        let r = reports.get(names::GRAL_POLARIZATION);
        r.instances_run += 1;
        let (sm, bm) = (small.multiplicities(), big.multiplicities());
        let n_big = pol.ideal.n() as isize;
        for j in 0..=n_big {
            if sm.lambda0(j - h) > bm.lambda0(j) {
                r.fail(&describe, format!("lambda0_{} <= {}", j - h, bm.lambda0(j)), sm.lambda0(j - h));
            }
            for i in 0..=n_big {
                if sm.gamma(i - h, j) > bm.gamma(i, j) {
                    r.fail(&describe, format!("gamma_{},{} <= {}", i - h, j, bm.gamma(i, j)), sm.gamma(i - h, j));
                }
            }
        }

        let r = reports.get(names::D_SQUARED);
        r.instances_run += 1;
        if !big.exts().iter().all(|e| dual_complex(e).check().is_ok()) {
            r.fail(format!("polarization of {describe}"), "d o d = 0", "nonzero composite");
        }
        let r = reports.get(names::COMMUTING_SQUARES);
        r.instances_run += 1;
        for e in big.exts() {
            if let Err(err) = e.check_commuting_squares() {
                r.fail(format!("polarization of {describe}"), "commuting squares", err);
            }
        }
        Ok(())
    })());
    if let Err(e) = result {
        let r = reports.get(names::POLARIZATION_THEOREM);
        r.instances_run += 1;
        r.fail(&describe, "tables of sqrt(I) and its polarization", e);
    }
}

/// Violations of the variant of the polarization inequality for `gamma` with
/// both indices shifted by `h`.
pub fn shifted_polarization_violations(ideal: &MonomialIdeal, field: FieldSpec) -> Result<usize> {
    let pol = ideal.polarize();
    let h = pol.height_shift as isize;
    with_field!(field, |f| {
        let sm = LocalCohomology::new(f, &ideal.radical().stanley_reisner()?)?.multiplicities();
        let bm = LocalCohomology::new(f, &pol.ideal.stanley_reisner()?)?.multiplicities();
        let n = pol.ideal.n() as isize;
        let mut count = 0;
        for i in 0..=n {
            for j in 0..=n {
                count += (sm.gamma(i - h, j - h) > bm.gamma(i, j)) as usize;
            }
        }
        Ok(count)
    })
}

/// Every check that takes a monomial ideal.
pub fn check_ideal(ideal: &MonomialIdeal, fields: &[FieldSpec]) -> Reports {
    let mut reports = Reports::new();
    if fields.is_empty() {
        return reports;
    }
    for &field in fields {
        ideal_checks(ideal, field, &mut reports);
    }
    reports.get(names::POLARIZATION_HH_GRAPH).merge(check_polarization_hh_graph(ideal));
    reports
}
