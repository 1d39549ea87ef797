//! Verification suites that confront every formula, recurrence, bijection
//! and composition identity with the exhaustive census, producing a
//! deterministic machine-readable report.
//!
//! A failing check always carries a witness: the chain size, the parameters
//! and the two disagreeing values (and, where applicable, the offending map
//! or path). The idempotent path-pattern check is exploratory: a mismatch
//! there is reported with its minimal counterexample under a dedicated
//! `paper-ambiguity` status rather than as a failure, and does not affect
//! the overall verdict. Fault-injection fixtures perturb known-good data to
//! prove the suites actually bite.

use std::collections::BTreeSet;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use crate::bijection::{map_to_path, path_to_map};
use crate::chainmap::{ChainMap, ClassId};
use crate::counting::{self, BigCount};
use crate::enumeration::{census, enumerate_class_with_guard, enumerate_paths_with_guard, PathFilter, StatisticId};

/// Outcome of one check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckStatus {
    Pass,
    Fail,
    /// The exploratory idempotent path-pattern check found a mismatch; the
    /// counterexample documents it without failing the run.
    PaperAmbiguity,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub check_id: String,
    pub n_range: (usize, usize),
    pub status: CheckStatus,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub checks: Vec<CheckResult>,
}

impl VerificationReport {
    pub fn new() -> Self {
        VerificationReport::default()
    }

    fn record(&mut self, check_id: &str, n_range: (usize, usize), witness: Option<String>) {
        let status = if witness.is_some() { CheckStatus::Fail } else { CheckStatus::Pass };
        self.checks.push(CheckResult {
            check_id: check_id.to_string(),
            n_range,
            status,
            counterexample: witness,
        });
    }

    fn record_exploratory(
        &mut self,
        check_id: &str,
        n_range: (usize, usize),
        witness: Option<String>,
    ) {
        let status = if witness.is_some() {
            CheckStatus::PaperAmbiguity
        } else {
            CheckStatus::Pass
        };
        self.checks.push(CheckResult {
            check_id: check_id.to_string(),
            n_range,
            status,
            counterexample: witness,
        });
    }

    pub fn extend(&mut self, other: VerificationReport) {
        self.checks.extend(other.checks);
    }

    /// True when no check failed (exploratory ambiguities do not count).
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.status != CheckStatus::Fail)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| c.status == CheckStatus::Fail)
    }

    pub fn find(&self, check_id: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.check_id == check_id)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization cannot fail")
    }
}

/// Deliberate data perturbations used to prove the suites detect faults.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub enum Fixture {
    #[default]
    None,
    /// Report 3 instead of 2 as the expected order of the decreasing class
    /// at n = 1.
    PerturbR,
    /// Drop the empty map from the enumerated bottom-free class before the
    /// product-set comparison.
    DropEmptyQp,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown fixture name: {0}")]
pub struct UnknownFixture(pub String);

impl FromStr for Fixture {
    type Err = UnknownFixture;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "perturb-r" => Ok(Fixture::PerturbR),
            "drop-empty-qp" => Ok(Fixture::DropEmptyQp),
            other => Err(UnknownFixture(other.to_string())),
        }
    }
}

/// Per-suite size caps and the active fixture.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HarnessConfig {
    pub orders_max: usize,
    pub bijection_max: usize,
    pub fgj_max: usize,
    /// Cap for closure and product-set checks (quadratic in class size).
    pub semigroup_max: usize,
    pub phi_max: usize,
    /// Cap for the brute-force idempotent counts in the decreasing class.
    pub idempotent_max: usize,
    /// Cap for the exploratory idempotent path-pattern comparison.
    pub idempotent_path_max: usize,
    /// Cap for the all-functions idempotent brute force.
    pub tn_pn_max: usize,
    /// Cap for pure-arithmetic identities (closed form vs recurrence,
    /// row sums).
    pub consistency_max: usize,
    /// Cap for the idempotent-total recurrence.
    pub e_recurrence_max: usize,
    pub fixture: Fixture,
}

impl Default for HarnessConfig {
    fn default() -> Self {
        HarnessConfig {
            orders_max: 7,
            bijection_max: 7,
            fgj_max: 7,
            semigroup_max: 5,
            phi_max: 6,
            idempotent_max: 8,
            idempotent_path_max: 6,
            tn_pn_max: 5,
            consistency_max: 30,
            e_recurrence_max: 20,
            fixture: Fixture::None,
        }
    }
}

fn members(class: ClassId, n: usize) -> Vec<ChainMap> {
    enumerate_class_with_guard(class, n, n)
        .expect("guard equals the requested size")
        .collect()
}

fn class_size(class: ClassId, n: usize) -> BigCount {
    BigCount::from(
        enumerate_class_with_guard(class, n, n)
            .expect("guard equals the requested size")
            .count(),
    )
}

fn order_check(
    report: &mut VerificationReport,
    id: &str,
    class: ClassId,
    lo: usize,
    hi: usize,
    expected: impl Fn(usize) -> BigCount,
) {
    let mut witness = None;
    for n in lo..=hi {
        let counted = class_size(class, n);
        let want = expected(n);
        if counted != want {
            witness = Some(format!("n={n}: enumerated {counted}, formula {want}"));
            break;
        }
    }
    report.record(id, (lo, hi), witness);
}

fn path_count_check(
    report: &mut VerificationReport,
    id: &str,
    filter: PathFilter,
    hi: usize,
    expected: impl Fn(usize) -> BigCount,
) {
    let mut witness = None;
    for n in 0..=hi {
        let counted = BigCount::from(
            enumerate_paths_with_guard(n, filter, n)
                .expect("guard equals the requested size")
                .count(),
        );
        let want = expected(n);
        if counted != want {
            witness = Some(format!("n={n}: enumerated {counted}, formula {want}"));
            break;
        }
    }
    report.record(id, (0, hi), witness);
}

/// Class orders against their formulas, the path-side mirrors of the same
/// counts, and the purely arithmetic consistency identities.
pub fn verify_orders(cfg: &HarnessConfig) -> VerificationReport {
    let mut report = VerificationReport::new();
    let hi = cfg.orders_max;
    let fixture = cfg.fixture;

    order_check(&mut report, "orders/pc", ClassId::Pc, 0, hi, |n| {
        if fixture == Fixture::PerturbR && n == 1 {
            BigCount::from(3usize)
        } else {
            counting::schroeder_large(n)
        }
    });
    order_check(&mut report, "orders/q", ClassId::Q, 1, hi, counting::schroeder_small);
    order_check(&mut report, "orders/qp", ClassId::Qp, 1, hi, counting::schroeder_small);
    order_check(&mut report, "orders/c", ClassId::C, 0, hi, counting::catalan);
    order_check(&mut report, "orders/del", ClassId::Del, 0, hi, |n| {
        counting::delannoy(n, n)
    });
    order_check(&mut report, "orders/po", ClassId::Po, 0, hi, counting::po_order);
    order_check(&mut report, "orders/o", ClassId::O, 1, hi, |n| {
        (1..=n).map(|r| counting::j_o(n, r)).sum()
    });

    path_count_check(
        &mut report,
        "orders/paths-type-i",
        PathFilter { subdiagonal: true, ..Default::default() },
        hi,
        counting::schroeder_large,
    );
    path_count_check(
        &mut report,
        "orders/paths-unrestricted",
        PathFilter::default(),
        hi,
        |n| counting::delannoy(n, n),
    );
    path_count_check(
        &mut report,
        "orders/paths-catalan",
        PathFilter { subdiagonal: true, no_diag: true, ..Default::default() },
        hi,
        counting::catalan,
    );
    path_count_check(
        &mut report,
        "orders/paths-last-not-h",
        PathFilter { last_not_h: true, ..Default::default() },
        hi,
        counting::po_order,
    );

    let chi = cfg.consistency_max;
    let mut witness = None;
    for n in 0..=chi {
        let rec = counting::schroeder_large(n);
        let closed = counting::schroeder_large_closed(n);
        if rec != closed {
            witness = Some(format!("n={n}: recurrence {rec}, closed form {closed}"));
            break;
        }
    }
    report.record("orders/schroeder-closed-form", (0, chi), witness);

    let mut witness = None;
    for n in 1..=chi {
        let doubled = BigCount::from(2usize) * counting::schroeder_small(n);
        let large = counting::schroeder_large(n);
        if doubled != large {
            witness = Some(format!("n={n}: 2*s_n = {doubled}, r_n = {large}"));
            break;
        }
    }
    report.record("orders/schroeder-small-double", (1, chi), witness);

    let mut witness = None;
    for n in 1..=chi {
        let direct = counting::delannoy(n, n);
        let recurrence = counting::delannoy(n - 1, n)
            + counting::delannoy(n, n - 1)
            + counting::delannoy(n - 1, n - 1);
        if direct != recurrence {
            witness = Some(format!("n={n}: sum {direct}, recurrence {recurrence}"));
            break;
        }
    }
    report.record("orders/delannoy-central-recurrence", (1, chi), witness);

    let sym_hi = 12.min(chi);
    let mut witness = None;
    'sym: for n in 0..=sym_hi {
        for k in 0..=sym_hi {
            if counting::delannoy(n, k) != counting::delannoy(k, n) {
                witness = Some(format!("(n,k)=({n},{k}): D(n,k) != D(k,n)"));
                break 'sym;
            }
        }
    }
    report.record("orders/delannoy-symmetry", (0, sym_hi), witness);

    report
}

/// Round trips in both directions, the worked example pairs, and the
/// class/statistic transport laws.
pub fn verify_bijection(cfg: &HarnessConfig) -> VerificationReport {
    let mut report = VerificationReport::new();
    let hi = cfg.bijection_max;

    let mut witness = None;
    'maps: for n in 0..=hi {
        for m in members(ClassId::Del, n) {
            let back = path_to_map(&map_to_path(&m));
            if back != m {
                witness = Some(format!("n={n}: {m} -> {} -> {back}", map_to_path(&m)));
                break 'maps;
            }
        }
    }
    report.record("bijection/map-round-trip", (0, hi), witness);

    let mut witness = None;
    'paths: for n in 0..=hi {
        for p in enumerate_paths_with_guard(n, PathFilter::default(), n)
            .expect("guard equals the requested size")
        {
            let back = map_to_path(&path_to_map(&p));
            if back != p {
                witness = Some(format!("n={n}: {} -> {} -> {}", p, path_to_map(&p), back));
                break 'paths;
            }
        }
    }
    report.record("bijection/path-round-trip", (0, hi), witness);

    let pairs = [
        (ChainMap::new(4, 5, vec![(1, 1), (3, 1)]), "DHHVDV"),
        (ChainMap::new(4, 5, vec![(0, 0), (2, 2), (3, 2)]), "HVDHHVV"),
        (
            ChainMap::new(7, 8, vec![(0, 0), (2, 0), (3, 0), (5, 4), (6, 4)]),
            "HHHVDVVHHDVV",
        ),
        (ChainMap::new(4, 5, vec![(0, 0), (1, 4), (3, 4)]), "HVVDVHH"),
        (
            ChainMap::new(7, 8, vec![(0, 0), (2, 3), (3, 3), (5, 4), (6, 7)]),
            "HVDVHHVHDVVH",
        ),
    ];
    let mut witness = None;
    for (map, text) in pairs {
        let map = map.expect("fixture maps are valid");
        let encoded = map_to_path(&map).render();
        if encoded != text {
            witness = Some(format!("{map} encoded to {encoded}, expected {text}"));
            break;
        }
        let parsed = crate::lattice::LatticePath::parse(text, map.dom_size())
            .expect("fixture paths are valid");
        let decoded = path_to_map(&parsed);
        if decoded != map {
            witness = Some(format!("{text} decoded to {decoded}, expected {map}"));
            break;
        }
    }
    report.record("bijection/worked-examples", (4, 7), witness);

    let mut class_witness = None;
    let mut stat_witness = None;
    'transport: for n in 0..=hi {
        for m in members(ClassId::Del, n) {
            let p = map_to_path(&m);
            let path_stats = p.stats();
            let map_stats = m.stats();
            if m.is_decreasing() != p.is_subdiagonal() || m.is_full() != !path_stats.has_diag {
                class_witness = Some(format!("n={n}: map {m}, path {p}"));
                break 'transport;
            }
            let bounded = map_stats.max_im.is_none_or(|top| top < n);
            if bounded != !path_stats.last_step_is_h {
                class_witness = Some(format!("n={n}: map {m}, path {p}"));
                break 'transport;
            }
            if path_stats.v_count != map_stats.dom_card
                || path_stats.h_segments != map_stats.im_card
                || path_stats.last_h_level != map_stats.max_im
            {
                stat_witness = Some(format!(
                    "n={n}: map {m} has ({}, {}, {:?}), path {p} has ({}, {}, {:?})",
                    map_stats.dom_card,
                    map_stats.im_card,
                    map_stats.max_im,
                    path_stats.v_count,
                    path_stats.h_segments,
                    path_stats.last_h_level
                ));
                break 'transport;
            }
        }
    }
    report.record("bijection/class-transport", (0, hi), class_witness);
    report.record("bijection/statistic-transport", (0, hi), stat_witness);

    report
}

fn census_check(
    report: &mut VerificationReport,
    id: &str,
    class: ClassId,
    stat: StatisticId,
    hi: usize,
    k_lo: fn(usize) -> usize,
    formula: impl Fn(usize, usize) -> BigCount,
) {
    let mut witness = None;
    'outer: for n in 1..=hi {
        let hist = census(class, n, stat).expect("suite caps stay within the guard");
        for k in k_lo(n)..=n {
            let counted = hist.get(&k).cloned().unwrap_or_default();
            let want = formula(n, k);
            if counted != want {
                witness = Some(format!("n={n}, k={k}: census {counted}, formula {want}"));
                break 'outer;
            }
        }
        if let Some((&stray, count)) = hist.iter().find(|(&k, _)| k < k_lo(n) || k > n) {
            witness = Some(format!("n={n}: unexpected bucket {stray} holding {count}"));
            break;
        }
    }
    report.record(id, (1, hi), witness);
}

/// The F/G/J refinements against the census, pointwise, plus the row-sum
/// identities tying every refinement back to its class order.
pub fn verify_fgj(cfg: &HarnessConfig) -> VerificationReport {
    let mut report = VerificationReport::new();
    let hi = cfg.fgj_max;

    census_check(&mut report, "fgj/f-pc", ClassId::Pc, StatisticId::DomCard, hi, |_| 0, counting::f_pc);
    census_check(&mut report, "fgj/g-pc", ClassId::Pc, StatisticId::GBucket, hi, |_| 0, counting::g_pc);
    census_check(&mut report, "fgj/g-c", ClassId::C, StatisticId::GBucket, hi, |_| 1, counting::g_c);
    census_check(&mut report, "fgj/j-c", ClassId::C, StatisticId::ImCard, hi, |_| 1, counting::j_c);
    census_check(&mut report, "fgj/f-po", ClassId::Po, StatisticId::DomCard, hi, |_| 0, counting::f_po);
    census_check(&mut report, "fgj/g-po", ClassId::Po, StatisticId::GBucket, hi, |_| 0, counting::g_po);
    census_check(&mut report, "fgj/j-po", ClassId::Po, StatisticId::ImCard, hi, |_| 0, counting::j_po);
    census_check(&mut report, "fgj/g-o", ClassId::O, StatisticId::GBucket, hi, |_| 1, counting::g_o);
    census_check(&mut report, "fgj/j-o", ClassId::O, StatisticId::ImCard, hi, |_| 1, counting::j_o);

    let chi = cfg.consistency_max;
    let mut witness = None;
    for n in 1..=chi {
        let checks: [(&str, BigCount, BigCount); 8] = [
            ("sum f_pc = r_n", (0..=n).map(|r| counting::f_pc(n, r)).sum(), counting::schroeder_large(n)),
            ("sum g_pc = r_n", (0..=n).map(|k| counting::g_pc(n, k)).sum(), counting::schroeder_large(n)),
            ("sum j_c = catalan", (1..=n).map(|r| counting::j_c(n, r)).sum(), counting::catalan(n)),
            ("sum g_c = catalan", (1..=n).map(|k| counting::g_c(n, k)).sum(), counting::catalan(n)),
            ("sum f_po = c_n", (0..=n).map(|r| counting::f_po(n, r)).sum(), counting::po_order(n)),
            ("sum g_po = c_n", (0..=n).map(|k| counting::g_po(n, k)).sum(), counting::po_order(n)),
            ("sum j_po = c_n", (0..=n).map(|r| counting::j_po(n, r)).sum(), counting::po_order(n)),
            ("sum g_o = sum j_o", (1..=n).map(|k| counting::g_o(n, k)).sum(), (1..=n).map(|r| counting::j_o(n, r)).sum()),
        ];
        if let Some((label, got, want)) = checks.into_iter().find(|(_, a, b)| a != b) {
            witness = Some(format!("n={n}: {label} violated ({got} vs {want})"));
            break;
        }
        let e_sum: BigCount = (0..=n).map(|r| counting::e_nr(n, r)).sum();
        if e_sum != counting::e_total(n) {
            witness = Some(format!("n={n}: sum e(n,r) = {e_sum} != {}", counting::e_total(n)));
            break;
        }
    }
    report.record("fgj/row-sums", (1, chi), witness);

    report
}

fn product_set(lhs: &[ChainMap], rhs: &[ChainMap]) -> BTreeSet<ChainMap> {
    let mut out = BTreeSet::new();
    for f in lhs {
        for g in rhs {
            out.insert(f.compose(g).expect("same chain size"));
        }
    }
    out
}

/// Closure of the six square classes under composition, the product-set
/// identity relating the bottom-anchored class and its complement, and the
/// drop-the-bottom bijection between them.
pub fn verify_semigroup(cfg: &HarnessConfig) -> VerificationReport {
    let mut report = VerificationReport::new();
    let hi = cfg.semigroup_max;

    for class in [ClassId::Pc, ClassId::C, ClassId::Po, ClassId::O, ClassId::Q, ClassId::Qp] {
        let mut witness = None;
        'closure: for n in 0..=hi {
            let all = members(class, n);
            for f in &all {
                for g in &all {
                    let fg = f.compose(g).expect("same chain size");
                    if !fg.belongs_to(class) {
                        witness =
                            Some(format!("n={n}: {f} composed with {g} gives {fg} outside {class}"));
                        break 'closure;
                    }
                }
            }
        }
        report.record(&format!("semigroup/closure-{}", class.name()), (0, hi), witness);
    }

    let mut witness = None;
    'products: for n in 1..=hi {
        let q = members(ClassId::Q, n);
        let mut qp = members(ClassId::Qp, n);
        if cfg.fixture == Fixture::DropEmptyQp {
            qp.retain(|m| !m.pairs().is_empty());
        }
        let qp_set: BTreeSet<ChainMap> = qp.iter().cloned().collect();
        for (label, products) in [("q*qp", product_set(&q, &qp)), ("qp*q", product_set(&qp, &q))] {
            if products != qp_set {
                let missing = qp_set.difference(&products).next();
                let extra = products.difference(&qp_set).next();
                witness = Some(format!(
                    "n={n}: {label} differs from qp (missing {missing:?}, extra {extra:?})"
                ));
                break 'products;
            }
        }
    }
    report.record("semigroup/product-sets", (1, hi), witness);

    let phi_hi = cfg.phi_max;
    let mut witness = None;
    'phi: for n in 1..=phi_hi {
        let q = members(ClassId::Q, n);
        let qp_set: BTreeSet<ChainMap> = members(ClassId::Qp, n).into_iter().collect();
        let mut image = BTreeSet::new();
        for m in &q {
            let dropped = m.phi_q().expect("members of q admit phi");
            if !dropped.belongs_to(ClassId::Qp) {
                witness = Some(format!("n={n}: phi({m}) = {dropped} is not bottom-free"));
                break 'phi;
            }
            if dropped.phi_q_inv().expect("image admits the inverse") != *m {
                witness = Some(format!("n={n}: phi round trip moved {m}"));
                break 'phi;
            }
            if !image.insert(dropped.clone()) {
                witness = Some(format!("n={n}: phi not injective at {m}"));
                break 'phi;
            }
        }
        if image != qp_set {
            witness = Some(format!(
                "n={n}: phi image has {} elements, complement has {}",
                image.len(),
                qp_set.len()
            ));
            break;
        }
        for w in &qp_set {
            if w.phi_q_inv().expect("complement admits the inverse").phi_q().expect("q member") != *w
            {
                witness = Some(format!("n={n}: inverse round trip moved {w}"));
                break 'phi;
            }
        }
    }
    report.record("semigroup/phi-bijection", (1, phi_hi), witness);

    report
}

fn count_idempotent_full_maps(n: usize) -> u64 {
    let mut f = vec![0usize; n];
    let mut count = 0u64;
    loop {
        if (0..n).all(|x| f[f[x]] == f[x]) {
            count += 1;
        }
        let mut pos = 0;
        loop {
            if pos == n {
                return count;
            }
            f[pos] += 1;
            if f[pos] < n {
                break;
            }
            f[pos] = 0;
            pos += 1;
        }
    }
}

fn count_idempotent_partial_maps(n: usize) -> u64 {
    // value n encodes "undefined"
    let mut f = vec![0usize; n];
    let mut count = 0u64;
    loop {
        let idempotent = (0..n).all(|x| f[x] == n || (f[f[x]] != n && f[f[x]] == f[x]));
        if idempotent {
            count += 1;
        }
        let mut pos = 0;
        loop {
            if pos == n {
                return count;
            }
            f[pos] += 1;
            if f[pos] <= n {
                break;
            }
            f[pos] = 0;
            pos += 1;
        }
    }
}

/// Idempotent counts: brute force over the decreasing class against the
/// closed form and its refinement, the total recurrence, the exploratory
/// path-pattern comparison, and the full/partial transformation formulas.
pub fn verify_idempotents(cfg: &HarnessConfig) -> VerificationReport {
    let mut report = VerificationReport::new();

    let hi = cfg.idempotent_max;
    let mut total_witness = None;
    let mut refine_witness = None;
    for n in 0..=hi {
        let idempotents: Vec<ChainMap> = members(ClassId::Pc, n)
            .into_iter()
            .filter(|m| m.is_idempotent().expect("square maps"))
            .collect();
        let counted = BigCount::from(idempotents.len());
        let want = counting::e_total(n);
        if counted != want && total_witness.is_none() {
            total_witness = Some(format!("n={n}: brute force {counted}, formula {want}"));
        }
        for r in 0..=n {
            let bucket =
                BigCount::from(idempotents.iter().filter(|m| m.stats().im_card == r).count());
            let want = counting::e_nr(n, r);
            if bucket != want && refine_witness.is_none() {
                refine_witness = Some(format!("n={n}, r={r}: census {bucket}, formula {want}"));
            }
        }
    }
    report.record("idempotents/pc-total", (0, hi), total_witness);
    report.record("idempotents/pc-by-image-size", (0, hi), refine_witness);

    let rhi = cfg.e_recurrence_max;
    let mut witness = None;
    for n in 1..=rhi {
        let direct = counting::e_total(n);
        let stepped = BigCount::from(3usize) * counting::e_total(n - 1) - BigCount::from(1usize);
        if direct != stepped {
            witness = Some(format!("n={n}: closed form {direct}, recurrence {stepped}"));
            break;
        }
    }
    report.record("idempotents/total-recurrence", (1, rhi), witness);

    let phi = cfg.idempotent_path_max;
    let mut witness = None;
    'pattern: for n in 0..=phi {
        for m in members(ClassId::Po, n) {
            let path = map_to_path(&m);
            let pattern = path.is_idempotent_pattern();
            let truth = m.is_idempotent().expect("square maps");
            if pattern != truth {
                witness = Some(format!(
                    "n={n}: map {m} <-> path {path}: idempotent {truth}, pattern {pattern}"
                ));
                break 'pattern;
            }
        }
    }
    report.record_exploratory("idempotents/path-pattern", (0, phi), witness);

    let thi = cfg.tn_pn_max;
    let mut witness = None;
    for n in 1..=thi {
        let counted = BigCount::from(count_idempotent_full_maps(n));
        let want = counting::idem_tn(n);
        if counted != want {
            witness = Some(format!("n={n}: brute force {counted}, formula {want}"));
            break;
        }
    }
    report.record("idempotents/full-maps", (1, thi), witness);

    let mut witness = None;
    for n in 1..=thi {
        let counted = BigCount::from(count_idempotent_partial_maps(n));
        let want = counting::idem_pn(n);
        if counted != want {
            witness = Some(format!("n={n}: brute force {counted}, formula {want}"));
            break;
        }
    }
    report.record("idempotents/partial-maps", (1, thi), witness);

    report
}

/// Runs every suite and concatenates the reports.
pub fn verify_all(cfg: &HarnessConfig) -> VerificationReport {
    let mut report = verify_orders(cfg);
    report.extend(verify_bijection(cfg));
    report.extend(verify_fgj(cfg));
    report.extend(verify_semigroup(cfg));
    report.extend(verify_idempotents(cfg));
    report
}
