//! Numerical cross-check of the invariant signature by a conservation count.
//!
//! The form is perturbed inside the space of invariant exact forms until all
//! zeros are simple. The zeros near the origin are then found numerically and
//! summed orbit by orbit: an orbit contributes the sign of `(−1)^k 𝒥(p)` when it
//! is closed under conjugation and its isotropy lies in the kernel of `det`, and
//! nothing otherwise. The integer sum is compared with the exact signature.

mod classify;
mod generators;
mod solve;

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::exactlin::{fmt_rational, rat, ComplexPoint, Rational};
use crate::group::MatrixAction;
use crate::localalg::{quotient_algebra, MonomialOrder};
use crate::poly::{default_names, OneForm, Poly};
use crate::residue::omega_module;

pub use classify::{classify, conservation_sum, ClassifiedPoint};
pub use generators::invariant_generators;
pub use solve::{scaled_residual, singular_points};

#[derive(Clone, Debug, PartialEq)]
pub struct OracleConfig {
    pub seed: u64,
    /// Perturbation scale.
    pub t: Rational,
    /// Largest generator degree; `None` picks `max(2, deg ω + 1)`.
    pub max_degree: Option<u32>,
    pub tol_root: f64,
    pub tol_classify: f64,
    pub ball_radius: f64,
    /// Number of perturbations tried before giving up.
    pub attempts: usize,
}

impl Default for OracleConfig {
    fn default() -> Self {
        Self {
            seed: 0,
            t: rat(1, 20),
            max_degree: None,
            tol_root: 1e-10,
            tol_classify: 1e-6,
            ball_radius: 1.0,
            attempts: 8,
        }
    }
}

/// `ω̃ = ω + t·Σ λⱼ dzⱼ`.
#[derive(Clone, Debug, PartialEq)]
pub struct Perturbation {
    pub t: Rational,
    pub lambdas: Vec<Rational>,
    pub generators: Vec<Poly>,
}

impl Perturbation {
    /// `λⱼ = k/4` with `k` drawn uniformly from `±1 … ±8`.
    pub fn sample(t: Rational, generators: Vec<Poly>, rng: &mut impl Rng) -> Self {
        let lambdas = generators
            .iter()
            .map(|_| {
                let k: i64 = rng.gen_range(1..=8);
                rat(if rng.gen() { k } else { -k }, 4)
            })
            .collect();
        Self { t, lambdas, generators }
    }

    pub fn apply(&self, omega: &OneForm) -> OneForm {
        let n = omega.nvars();
        let mut h = Poly::zero(n);
        for (l, z) in self.lambdas.iter().zip(&self.generators) {
            h = &h + &z.scale(&(l * &self.t));
        }
        omega.add(&OneForm::differential(&h))
    }
}

/// Outcome of one oracle run.
#[derive(Clone, Debug)]
pub struct OracleReport {
    pub symbolic_signature: i64,
    /// `dim` of the local algebra at the origin.
    pub local_multiplicity: usize,
    pub perturbation: Option<Perturbation>,
    pub deformed: OneForm,
    pub global_dim: usize,
    pub points: Vec<ClassifiedPoint>,
    pub escapees: usize,
    pub total: i64,
    pub attempts: usize,
    pub config: OracleConfig,
}

impl OracleReport {
    pub fn agrees(&self) -> bool {
        self.total == self.symbolic_signature
    }
}

fn default_degree(omega: &OneForm) -> u32 {
    (omega.max_degree() + 1).max(2)
}

fn symbolic(omega: &OneForm, action: &MatrixAction) -> Result<(i64, usize)> {
    let module = omega_module(omega, action)?;
    let sig = module.residue_pairing()?.signature();
    Ok((sig, module.dim()))
}

/// Zeros, classification and sum for one deformed form.
fn count(
    deformed: &OneForm,
    action: &MatrixAction,
    mu: usize,
    config: &OracleConfig,
    seed: u64,
) -> Result<(usize, Vec<ClassifiedPoint>, usize, i64)> {
    action.check_form(deformed)?;
    let global_dim = quotient_algebra(deformed, MonomialOrder::GlobalDegRevLex)?.dim();
    let points = singular_points(deformed, seed, config.tol_root)?;
    debug_assert_eq!(points.len(), global_dim);
    let classified = classify(&points, deformed, action, config.tol_classify, config.ball_radius)?;
    let inside = classified.iter().filter(|c| c.in_ball).count();
    if inside != mu {
        return Err(Error::DegeneratePerturbation(format!(
            "{inside} zeros inside the ball of radius {}, expected {mu}",
            config.ball_radius
        )));
    }
    let escapees = classified.len() - inside;
    let total = conservation_sum(&classified);
    Ok((global_dim, classified, escapees, total))
}

/// Perturbs `ω` by random invariant exact forms and compares the conservation
/// sum with the exact invariant signature.
///
/// Degenerate, ambiguous or escaping perturbations are resampled up to
/// `config.attempts` times; the last failure is returned if none succeeds.
pub fn oracle_check(omega: &OneForm, action: &MatrixAction, config: &OracleConfig) -> Result<OracleReport> {
    let (sig, mu) = symbolic(omega, action)?;
    let generators = invariant_generators(action, config.max_degree.unwrap_or_else(|| default_degree(omega)));
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let mut last = None;
    for attempt in 0..config.attempts.max(1) {
        let pert = Perturbation::sample(config.t.clone(), generators.clone(), &mut rng);
        let deformed = pert.apply(omega);
        let seed = config.seed.wrapping_add(attempt as u64);
        match count(&deformed, action, mu, config, seed) {
            Ok((global_dim, points, escapees, total)) => {
                return Ok(OracleReport {
                    symbolic_signature: sig,
                    local_multiplicity: mu,
                    perturbation: Some(pert),
                    deformed,
                    global_dim,
                    points,
                    escapees,
                    total,
                    attempts: attempt + 1,
                    config: config.clone(),
                })
            }
            Err(
                e @ (Error::DegeneratePerturbation(_)
                | Error::AmbiguousClassification(_)
                | Error::NonConvergence { .. }
                | Error::NonIsolated(_)),
            ) => last = Some(e),
            Err(e) => return Err(e),
        }
    }
    Err(last.expect("at least one attempt"))
}

/// Same comparison for an explicitly given invariant deformation of `ω`.
pub fn oracle_check_deformation(
    omega: &OneForm,
    action: &MatrixAction,
    deformed: &OneForm,
    config: &OracleConfig,
) -> Result<OracleReport> {
    let (sig, mu) = symbolic(omega, action)?;
    let (global_dim, points, escapees, total) = count(deformed, action, mu, config, config.seed)?;
    Ok(OracleReport {
        symbolic_signature: sig,
        local_multiplicity: mu,
        perturbation: None,
        deformed: deformed.clone(),
        global_dim,
        points,
        escapees,
        total,
        attempts: 1,
        config: config.clone(),
    })
}

/// `x` to 12 significant digits, with values below `1e-12·scale` shown as 0.
pub fn fmt_float(x: f64, scale: f64) -> String {
    if x.abs() < 1e-12 * scale.max(1.0) {
        return "0".into();
    }
    let digits = 11 - x.abs().log10().floor() as i32;
    format!("{:.*}", digits.clamp(0, 20) as usize, x)
}

fn fmt_point(p: &ComplexPoint) -> String {
    let s = 1.0 + p.norm();
    let parts: Vec<String> = p
        .coordinates
        .iter()
        .map(|z| {
            let re = fmt_float(z.re, s);
            let im = fmt_float(z.im, s);
            match (re.as_str(), im.as_str()) {
                (_, "0") => re,
                ("0", _) => format!("{im}i"),
                _ if z.im < 0.0 => format!("{re}{im}i"),
                _ => format!("{re}+{im}i"),
            }
        })
        .collect();
    format!("({})", parts.join(", "))
}

impl fmt::Display for OracleReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = default_names(self.deformed.nvars());
        writeln!(f, "seed = {}", self.config.seed)?;
        writeln!(f, "t = {}", fmt_rational(&self.config.t))?;
        if let Some(p) = &self.perturbation {
            let terms: Vec<String> = p
                .lambdas
                .iter()
                .zip(&p.generators)
                .map(|(l, z)| format!("{}*({})", fmt_rational(l), z.display_with(&names)))
                .collect();
            writeln!(f, "perturbation = t*d({})", terms.join(" + "))?;
        }
        writeln!(f, "attempts = {}", self.attempts)?;
        writeln!(f, "global_dimension = {}", self.global_dim)?;
        writeln!(f, "local_multiplicity = {}", self.local_multiplicity)?;
        writeln!(f, "escapees = {}", self.escapees)?;
        writeln!(f, "points:")?;
        writeln!(
            f,
            "  # | coordinates | orbit | |isotropy| | in ker det | witness | k | sign | in ball"
        )?;
        for (i, c) in self.points.iter().enumerate() {
            let opt = |o: Option<String>| o.unwrap_or_else(|| "-".into());
            writeln!(
                f,
                "  {i} | {} | {} | {} | {} | {} | {} | {} | {}",
                fmt_point(&c.point),
                c.orbit_id,
                c.isotropy.len(),
                c.isotropy_in_det_kernel,
                opt(c.witness.as_ref().map(ToString::to_string)),
                opt(c.stratum_k.map(|k| k.to_string())),
                opt(c.jacobian_sign.map(|s| format!("{s:+}"))),
                c.in_ball
            )?;
        }
        writeln!(f, "contributions:")?;
        for (i, c) in self.points.iter().enumerate().filter(|(i, c)| c.orbit_id == *i) {
            writeln!(f, "  orbit {i}: {}", c.contribution())?;
        }
        writeln!(f, "conservation_sum = {}", self.total)?;
        writeln!(f, "symbolic_signature = {}", self.symbolic_signature)?;
        let verdict = if self.agrees() { "AGREE" } else { "DISAGREE" };
        write!(f, "verdict = {verdict} ({} = {})", self.total, self.symbolic_signature)
    }
}

/// Largest modulus of a point coordinate, for ball-radius choices.
pub fn max_abs(p: &ComplexPoint) -> f64 {
    p.coordinates.iter().map(|z| z.norm()).fold(0.0, f64::max)
}
