use super::*;
use std::thread;

/// Largest rounding residual a trigonometric formula may leave.
pub const MAX_RESIDUAL: f64 = 1e-6;

/// One acceptance criterion: a title and the sweeps that decide it.
pub struct Criterion {
    pub id: u32,
    pub title: &'static str,
    pub run: fn() -> Vec<Report>,
    /// Fail when a rounded floating-point formula leaves a residual of
    /// `MAX_RESIDUAL` or more.
    pub residual_bound: bool,
}

pub struct Outcome {
    pub id: u32,
    pub title: &'static str,
    pub reports: Vec<Report>,
    pub residual: Option<f64>,
    pub residual_ok: bool,
}

impl Outcome {
    pub fn ok(&self) -> bool {
        self.residual_ok && self.reports.iter().all(Report::ok)
    }

    pub fn cases(&self) -> usize {
        self.reports.iter().map(|r| r.cases).sum()
    }
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let res = self.residual.map(|r| format!(", max residual {:.1e}", r)).unwrap_or_default();
        write!(f, "criterion {:>2} {}: {} ({} cases{})", self.id, if self.ok() { "PASS" } else { "FAIL" }, self.title, self.cases(), res)?;
        if !self.ok() {
            for r in self.reports.iter().filter(|r| !r.ok()) {
                write!(f, "\n    {}", r.to_string().replace('\n', "\n    "))?;
            }
            if !self.residual_ok {
                write!(f, "\n    residual exceeds {:.0e}", MAX_RESIDUAL)?;
            }
        }
        Ok(())
    }
}

pub fn criteria() -> Vec<Criterion> {
    vec![
        Criterion { id: 1, title: "reflection and ballot counts", run: || vec![reflection_suite(6)], residual_bound: false },
        Criterion {
            id: 2,
            title: "trigonometric forms round to exact values",
            run: || vec![band_trig_sweep(6), strip_numeric_suite(4, 10, 7), affine_c_sweep(3, 5, 8)],
            residual_bound: true,
        },
        Criterion { id: 3, title: "cycle lemma and slope formulas", run: || vec![cycle_lemma_suite(10, 8)], residual_bound: false },
        Criterion {
            id: 4,
            title: "ladders, avoided points, box boundaries",
            run: || vec![determinant_suite(4, 4, 3)],
            residual_bound: false,
        },
        Criterion { id: 5, title: "Motzkin and Schröder counts", run: || vec![motzkin_suite(6, 10)], residual_bound: false },
        Criterion { id: 6, title: "orthogonal polynomial round trip", run: || vec![orthopoly_suite(25, 5, 11)], residual_bound: false },
        Criterion { id: 7, title: "symbolic strip formula", run: || vec![strip_symbolic_suite(4, 10)], residual_bound: false },
        Criterion {
            id: 8,
            title: "determinants, Pfaffians, tableaux",
            run: || vec![lgv_suite(3, 3, 5), minor_summation_suite(&[(2, 0, 2), (2, 0, 3), (3, 1, 4), (4, 2, 4)], 50, 3), ssyt_suite(6)],
            residual_bound: false,
        },
        Criterion {
            id: 9,
            title: "turn enumeration",
            run: || vec![turn_formula_suite(5, 4), turn_involution_suite(4, 3), nonint_turn_suite(3, 100, 9)],
            residual_bound: false,
        },
        Criterion {
            id: 10,
            title: "Weyl chambers and alcoves",
            run: || vec![finite_chamber_suite(3, 5, 8, 8), affine_chamber_suite(3, 5, 8)],
            residual_bound: true,
        },
        Criterion { id: 11, title: "kernel method", run: || vec![kernel_suite(12, 8, 1)], residual_bound: false },
        Criterion { id: 12, title: "q-Catalan and Rogers-Ramanujan", run: || vec![q_suite(8, 6, 30, 20)], residual_bound: false },
        Criterion { id: 13, title: "three-candidate ballot", run: || vec![kreweras_suite(4)], residual_bound: false },
    ]
}

pub fn evaluate(c: &Criterion) -> Outcome {
    let reports = (c.run)();
    let residual = reports.iter().filter_map(|r| r.max_residual).reduce(f64::max);
    let residual_ok = !c.residual_bound || residual.is_none_or(|r| r < MAX_RESIDUAL);
    Outcome { id: c.id, title: c.title, reports, residual, residual_ok }
}

/// All criteria, one thread each, in criterion order.
pub fn run_acceptance() -> Vec<Outcome> {
    let cs = criteria();
    thread::scope(|s| {
        let handles: Vec<_> = cs.iter().map(|c| s.spawn(move || evaluate(c))).collect();
        handles.into_iter().map(|h| h.join().expect("criterion panicked")).collect()
    })
}
