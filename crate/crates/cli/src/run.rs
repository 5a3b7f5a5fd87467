//! Command dispatch and report text.
//!
//! Every report is a pure function of the description and the flags, so equal
//! inputs give byte-identical output.

use std::fmt::Write as _;

use quotient_signature::exactlin::Rational;
use quotient_signature::oracle::{oracle_check, OracleConfig, OracleReport};
use quotient_signature::quantum::{
    admissibility_check, diagonal_orbifold_dim, diagonal_sector_dims, diagonal_total, quantum_report,
};
use quotient_signature::residue::radial_index_report;
use quotient_signature::Error;

use crate::problem::{FormSpec, GroupSpec, Problem};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Command {
    Signature,
    Quantum,
    OracleCheck,
    Burnside,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::Signature => "signature",
            Command::Quantum => "quantum",
            Command::OracleCheck => "oracle-check",
            Command::Burnside => "burnside",
        }
    }
}

/// Command-line values; each one present replaces the `[task]` entry.
#[derive(Clone, Debug, Default)]
pub struct Overrides {
    pub seed: Option<u64>,
    pub t: Option<Rational>,
    pub max_degree: Option<u32>,
    pub tol_root: Option<f64>,
    pub tol_classify: Option<f64>,
    pub ball_radius: Option<f64>,
    pub with_oracle: bool,
}

#[derive(Debug)]
pub struct Outcome {
    pub text: String,
    pub exit: u8,
}

pub const EXIT_INPUT: u8 = 2;
pub const EXIT_NON_ISOLATED: u8 = 3;
pub const EXIT_VERIFICATION: u8 = 4;

pub fn exit_code(e: &Error) -> u8 {
    match e {
        Error::NonIsolated(_) => EXIT_NON_ISOLATED,
        Error::Parse(_)
        | Error::Dimension(_)
        | Error::InvalidAction(_)
        | Error::NotInvariant { .. }
        | Error::GroupTooLarge { .. }
        | Error::SubgroupMismatch(_)
        | Error::NotQuasihomogeneous(_) => EXIT_INPUT,
        Error::SingularMatrix
        | Error::NonConvergence { .. }
        | Error::DegeneratePairing { .. }
        | Error::ZeroJacobianClass
        | Error::DegenerateFunctional
        | Error::DegeneratePerturbation(_)
        | Error::AmbiguousClassification(_) => EXIT_VERIFICATION,
    }
}

fn oracle_config(p: &Problem, o: &Overrides) -> OracleConfig {
    let d = OracleConfig::default();
    let t = &p.task;
    OracleConfig {
        seed: o.seed.or(t.seed).unwrap_or(d.seed),
        t: o.t.clone().or_else(|| t.t.clone()).unwrap_or(d.t),
        max_degree: o.max_degree.or(t.max_degree).or(d.max_degree),
        tol_root: o.tol_root.or(t.tol_root).unwrap_or(d.tol_root),
        tol_classify: o.tol_classify.or(t.tol_classify).unwrap_or(d.tol_classify),
        ball_radius: o.ball_radius.or(t.ball_radius).unwrap_or(d.ball_radius),
        attempts: d.attempts,
    }
}

fn header(p: &Problem, cmd: Command) -> String {
    let mut s = format!("command = {}\n", cmd.name());
    if !p.variables.is_empty() {
        let _ = writeln!(s, "variables = {}", p.variables.join(", "));
    }
    let group = match &p.group {
        None => "trivial".to_string(),
        Some(GroupSpec::Matrix { factors, .. }) => {
            let f: Vec<String> = factors.iter().map(|m| format!("Z{m}")).collect();
            if f.is_empty() {
                "trivial".into()
            } else {
                f.join(" x ")
            }
        }
        Some(GroupSpec::Diagonal { modulus, characters }) => {
            format!("diagonal mod {modulus} with {} generator(s)", characters.len())
        }
    };
    let _ = writeln!(s, "group = {group}");
    match &p.form {
        Some(FormSpec::Function(f)) => {
            let _ = writeln!(s, "form = d({})", f.display_with(&p.variables));
        }
        Some(FormSpec::Components(c)) => {
            let parts: Vec<String> = c.iter().map(|x| x.display_with(&p.variables)).collect();
            let _ = writeln!(s, "form = ({})", parts.join("; "));
        }
        None => {}
    }
    s
}

fn oracle_block(report: &OracleReport) -> (String, u8) {
    let exit = if report.agrees() { 0 } else { EXIT_VERIFICATION };
    (format!("{report}\n"), exit)
}

pub fn run(p: &Problem, cmd: Command, o: &Overrides) -> Result<Outcome, Error> {
    let mut text = header(p, cmd);
    let mut exit = 0;
    match cmd {
        Command::Signature => {
            let omega = p.one_form()?;
            let action = p.matrix_action()?;
            text += &radial_index_report(&omega, &action)?.to_string();
            if o.with_oracle || p.task.with_oracle == Some(true) {
                let r = oracle_check(&omega, &action, &oracle_config(p, o))?;
                let (block, code) = oracle_block(&r);
                text += "oracle:\n";
                text += &block;
                exit = code;
            }
        }
        Command::OracleCheck => {
            let omega = p.one_form()?;
            let action = p.matrix_action()?;
            let r = oracle_check(&omega, &action, &oracle_config(p, o))?;
            let (block, code) = oracle_block(&r);
            text += &block;
            exit = code;
        }
        Command::Quantum => {
            let f = p.function()?;
            match &p.group {
                Some(GroupSpec::Diagonal { .. }) => {
                    let action = p.diagonal_action()?;
                    let (Some(weights), Some(degree)) = (&p.weights, p.degree) else {
                        return Err(Error::Parse(
                            "semantic error: a diagonal group needs 'weights' and 'degree' in [form]".into(),
                        ));
                    };
                    let sectors = diagonal_sector_dims(f, weights, degree, &action)?;
                    text += "sectors:\n  g | n_g | dim\n";
                    for s in &sectors {
                        let g: Vec<String> = s.element.iter().map(u32::to_string).collect();
                        let _ = writeln!(text, "  ({}) | {} | {}", g.join(", "), s.n_g, s.dim);
                    }
                    let _ = writeln!(text, "total_dim = {}", diagonal_total(&sectors));
                    let _ = writeln!(text, "orbifold_dim = {}", diagonal_orbifold_dim(&sectors));
                    match admissibility_check(weights, degree, &action) {
                        Ok(b) => {
                            let _ = writeln!(text, "admissible = {b}");
                        }
                        Err(e) => {
                            let _ = writeln!(text, "admissible = undefined ({e})");
                        }
                    }
                }
                _ => {
                    let report = quantum_report(f, &p.matrix_action()?)?;
                    let _ = writeln!(text, "{report}");
                }
            }
        }
        Command::Burnside => {
            let (ring, values) = p.evaluate_burnside()?;
            let lattice = ring.lattice();
            text += "subgroups:\n";
            for (i, h) in lattice.subgroups().iter().enumerate() {
                let _ = writeln!(text, "  H{i} | order {} | {h}", h.order());
            }
            for (name, v) in &values {
                let _ = writeln!(text, "{name} = {}", ring.format(v));
                let _ = writeln!(text, "  r0 = {}", ring.r0(v));
                let _ = writeln!(text, "  r1 = {}", ring.r1(v));
                let rep = ring.to_rep_ring(v)?;
                let _ = writeln!(text, "  rep_ring = {rep}");
                let chars: Vec<String> = rep.character_values().iter().map(|(g, c)| format!("{g}:{c}")).collect();
                let _ = writeln!(text, "  character = {}", chars.join(" "));
            }
        }
    }
    Ok(Outcome { text, exit })
}

/// `t` as given on the command line.
pub fn parse_t(s: &str) -> Result<Rational, String> {
    let clean: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    clean.parse().map_err(|_| format!("'{s}' is not a rational number"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::problem::parse;

    const HYPERBOLIC: &str =
        "[ring]\nvariables = x, y\n[group]\ninvariant_factors = 2\ngenerator = [[-1, 0], [0, -1]]\n[form]\nf = x^2 - y^2\n";

    fn go(text: &str, cmd: Command, o: &Overrides) -> Outcome {
        run(&parse(text).unwrap(), cmd, o).unwrap()
    }

    #[test]
    fn hyperbolic_signature() {
        let out = go(HYPERBOLIC, Command::Signature, &Overrides::default());
        assert_eq!(out.exit, 0);
        assert!(out.text.contains("\nsignature = -1\n"), "{}", out.text);
        assert!(out.text.contains("radial_index_on_quotient = -1"));
    }

    #[test]
    fn quadric_quantum_totals() {
        let text = HYPERBOLIC.replace("x^2 - y^2", "x^2 + y^2");
        let out = go(&text, Command::Quantum, &Overrides::default());
        for key in ["total_dim = 2", "orbifold_dim = 2", "real_signature = 2"] {
            assert!(out.text.contains(key), "{}", out.text);
        }
    }

    #[test]
    fn diagonal_quantum() {
        let text =
            "[ring]\nvariables = x\n[group]\nmodulus = 3\ncharacter = 1\n[form]\nf = x^3\nweights = 1\ndegree = 3\n";
        let out = go(text, Command::Quantum, &Overrides::default());
        assert!(
            out.text.contains("total_dim = 2") && out.text.contains("admissible = true"),
            "{}",
            out.text
        );
    }

    #[test]
    fn burnside_sign_example() {
        let text = "[group]\ninvariant_factors = 2\n[burnside]\nu = 1 - 2*[G/H0]\n";
        let out = go(text, Command::Burnside, &Overrides::default());
        assert!(
            out.text.contains("r0 = -1") && out.text.contains("character = (0):-3 (1):1"),
            "{}",
            out.text
        );
    }

    #[test]
    fn reports_are_deterministic() {
        let text = "[ring]\nvariables = x\n[group]\ninvariant_factors = 2\ngenerator = [[-1]]\n[form]\nf = x^4\n";
        let o = Overrides {
            seed: Some(4),
            ..Overrides::default()
        };
        let a = go(text, Command::OracleCheck, &o);
        let b = go(text, Command::OracleCheck, &o);
        assert_eq!(a.text, b.text);
        assert_eq!(a.exit, 0);
        assert!(a.text.contains("verdict = AGREE (1 = 1)"));
    }

    #[test]
    fn exit_codes() {
        let text = "[ring]\nvariables = x, y\n[form]\nf = x^2\n";
        let err = run(&parse(text).unwrap(), Command::Signature, &Overrides::default()).unwrap_err();
        assert_eq!(exit_code(&err), EXIT_NON_ISOLATED);
        assert_eq!(exit_code(&Error::Parse("x".into())), EXIT_INPUT);
        assert_eq!(
            exit_code(&Error::AmbiguousClassification("x".into())),
            EXIT_VERIFICATION
        );
    }
}
