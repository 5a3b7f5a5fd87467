//! Plain-text problem descriptions.
//!
//! ```text
//! # comment
//! [ring]
//! variables = x, y
//!
//! [group]
//! invariant_factors = 2
//! generator = [[-1, 0], [0, -1]]     # one line per invariant factor
//!
//! [form]
//! f = x^2 - y^2                      # or: components = 2*x; -2*y
//!
//! [task]
//! seed = 3
//!
//! [burnside]
//! e = 1 - 2*[G/H0]
//! ```
//!
//! A diagonal group is given instead by `modulus = m` and one
//! `character = a1, ..., an` line per generator, meaning `xⱼ ↦ ζ_m^{aⱼ} xⱼ`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use quotient_signature::burnside::{BurnsideElement, BurnsideRing};
use quotient_signature::exactlin::{fmt_rational, Rational, RationalMatrix};
use quotient_signature::group::{AbelianGroup, MatrixAction};
use quotient_signature::poly::{OneForm, Poly};
use quotient_signature::quantum::DiagonalAction;
use quotient_signature::Error;

#[derive(Clone, Debug, PartialEq)]
pub enum GroupSpec {
    /// Generator `i` has order dividing `factors[i]`.
    Matrix {
        factors: Vec<u32>,
        generators: Vec<RationalMatrix>,
    },
    Diagonal {
        modulus: u32,
        characters: Vec<Vec<u32>>,
    },
}

#[derive(Clone, Debug, PartialEq)]
pub enum FormSpec {
    Function(Poly),
    Components(Vec<Poly>),
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct Task {
    pub command: Option<String>,
    pub seed: Option<u64>,
    pub t: Option<Rational>,
    pub max_degree: Option<u32>,
    pub tol_root: Option<f64>,
    pub tol_classify: Option<f64>,
    pub ball_radius: Option<f64>,
    pub with_oracle: Option<bool>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Problem {
    pub variables: Vec<String>,
    /// `None` is the trivial group.
    pub group: Option<GroupSpec>,
    pub form: Option<FormSpec>,
    pub weights: Option<Vec<u32>>,
    pub degree: Option<u32>,
    pub task: Task,
    /// Named Burnside-ring expressions, evaluated in order.
    pub burnside: Vec<(String, String)>,
}

pub const COMMANDS: [&str; 4] = ["signature", "quantum", "oracle-check", "burnside"];

fn at(line: usize, msg: impl fmt::Display) -> Error {
    Error::Parse(format!("line {line}: {msg}"))
}

fn parse_num<T: FromStr>(line: usize, key: &str, v: &str) -> Result<T, Error> {
    v.trim()
        .parse()
        .map_err(|_| at(line, format!("'{key}' expects a number, got '{}'", v.trim())))
}

fn parse_list<T: FromStr>(line: usize, key: &str, v: &str) -> Result<Vec<T>, Error> {
    if v.trim().is_empty() {
        return Ok(Vec::new());
    }
    v.split(',').map(|s| parse_num(line, key, s)).collect()
}

fn parse_rational(line: usize, v: &str) -> Result<Rational, Error> {
    let s: String = v.chars().filter(|c| !c.is_whitespace()).collect();
    Rational::from_str(&s).map_err(|_| at(line, format!("'{}' is not a rational number", v.trim())))
}

/// `[[a, b], [c, d]]`; `offset` is the column of `text` in its line.
fn parse_matrix(line: usize, offset: usize, text: &str) -> Result<RationalMatrix, Error> {
    let err = |col: usize, msg: &str| Error::Parse(format!("line {line}, column {}: {msg}", offset + col + 1));
    let chars: Vec<char> = text.chars().collect();
    let mut rows: Vec<Vec<Rational>> = Vec::new();
    let mut i = 0;
    let skip = |i: &mut usize| {
        while *i < chars.len() && chars[*i].is_whitespace() {
            *i += 1;
        }
    };
    skip(&mut i);
    if chars.get(i) != Some(&'[') {
        return Err(err(i, "expected '[' to open a matrix"));
    }
    i += 1;
    loop {
        skip(&mut i);
        if chars.get(i) != Some(&'[') {
            return Err(err(i, "expected '[' to open a row"));
        }
        i += 1;
        let mut row = Vec::new();
        loop {
            skip(&mut i);
            let start = i;
            while i < chars.len() && !matches!(chars[i], ',' | ']') {
                i += 1;
            }
            let tok: String = chars[start..i].iter().collect();
            let tok = tok.trim();
            let s: String = tok.chars().filter(|c| !c.is_whitespace()).collect();
            row.push(Rational::from_str(&s).map_err(|_| err(start, &format!("'{tok}' is not a rational number")))?);
            match chars.get(i) {
                Some(',') => i += 1,
                Some(']') => {
                    i += 1;
                    break;
                }
                _ => return Err(err(i, "unterminated row")),
            }
        }
        rows.push(row);
        skip(&mut i);
        match chars.get(i) {
            Some(',') => i += 1,
            Some(']') => {
                i += 1;
                break;
            }
            _ => return Err(err(i, "expected ',' or ']' after a row")),
        }
    }
    skip(&mut i);
    if i < chars.len() {
        return Err(err(i, "trailing characters after the matrix"));
    }
    RationalMatrix::from_rows(rows).map_err(|_| err(0, "rows have different lengths"))
}

fn parse_bool(line: usize, v: &str) -> Result<bool, Error> {
    match v.trim() {
        "true" => Ok(true),
        "false" => Ok(false),
        other => Err(at(line, format!("expected true or false, got '{other}'"))),
    }
}

/// Parsed but not yet validated entries, with line numbers for diagnostics.
#[derive(Default)]
struct Raw {
    variables: Option<(usize, String)>,
    factors: Option<(usize, Vec<u32>)>,
    generators: Vec<(usize, RationalMatrix)>,
    modulus: Option<(usize, u32)>,
    characters: Vec<(usize, Vec<u32>)>,
    f: Option<(usize, String)>,
    components: Option<(usize, String)>,
    weights: Option<(usize, Vec<u32>)>,
    degree: Option<(usize, u32)>,
    task: Task,
    burnside: Vec<(usize, String, String)>,
}

fn set_once<T>(slot: &mut Option<(usize, T)>, line: usize, key: &str, v: T) -> Result<(), Error> {
    if let Some((first, _)) = slot {
        return Err(at(line, format!("'{key}' already given on line {first}")));
    }
    *slot = Some((line, v));
    Ok(())
}

fn opt_once<T>(slot: &mut Option<T>, line: usize, key: &str, v: T) -> Result<(), Error> {
    if slot.is_some() {
        return Err(at(line, format!("'{key}' given twice")));
    }
    *slot = Some(v);
    Ok(())
}

fn is_name(s: &str) -> bool {
    let mut cs = s.chars();
    matches!(cs.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && cs.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

fn scan(text: &str) -> Result<Raw, Error> {
    let mut raw = Raw::default();
    let mut section: Option<String> = None;
    let mut seen = Vec::new();
    for (idx, full) in text.lines().enumerate() {
        let line = idx + 1;
        let content = full.split('#').next().unwrap_or("");
        let trimmed = content.trim();
        if trimmed.is_empty() {
            continue;
        }
        if let Some(rest) = trimmed.strip_prefix('[') {
            let name = rest
                .strip_suffix(']')
                .ok_or_else(|| at(line, "section header must end with ']'"))?
                .trim();
            if !["ring", "group", "form", "task", "burnside"].contains(&name) {
                return Err(at(line, format!("unknown section [{name}]")));
            }
            if seen.contains(&name.to_string()) {
                return Err(at(line, format!("section [{name}] appears twice")));
            }
            seen.push(name.to_string());
            section = Some(name.to_string());
            continue;
        }
        let Some(eq) = content.find('=') else {
            return Err(at(line, "expected 'key = value'"));
        };
        let key = content[..eq].trim();
        let value = &content[eq + 1..];
        let value_col = eq + 1;
        let Some(sec) = section.as_deref() else {
            return Err(at(line, "entry before any section header"));
        };
        let unknown = || at(line, format!("unknown key '{key}' in [{sec}]"));
        match sec {
            "ring" => match key {
                "variables" => set_once(&mut raw.variables, line, key, value.to_string())?,
                _ => return Err(unknown()),
            },
            "group" => match key {
                "invariant_factors" => set_once(&mut raw.factors, line, key, parse_list(line, key, value)?)?,
                "generator" => raw.generators.push((line, parse_matrix(line, value_col, value)?)),
                "modulus" => set_once(&mut raw.modulus, line, key, parse_num(line, key, value)?)?,
                "character" => raw.characters.push((line, parse_list(line, key, value)?)),
                _ => return Err(unknown()),
            },
            "form" => match key {
                "f" => set_once(&mut raw.f, line, key, value.trim().to_string())?,
                "components" => set_once(&mut raw.components, line, key, value.trim().to_string())?,
                "weights" => set_once(&mut raw.weights, line, key, parse_list(line, key, value)?)?,
                "degree" => set_once(&mut raw.degree, line, key, parse_num(line, key, value)?)?,
                _ => return Err(unknown()),
            },
            "task" => {
                let t = &mut raw.task;
                match key {
                    "command" => {
                        let c = value.trim();
                        if !COMMANDS.contains(&c) {
                            return Err(at(line, format!("unknown command '{c}'")));
                        }
                        opt_once(&mut t.command, line, key, c.to_string())?
                    }
                    "seed" => opt_once(&mut t.seed, line, key, parse_num(line, key, value)?)?,
                    "t" => opt_once(&mut t.t, line, key, parse_rational(line, value)?)?,
                    "max_degree" => opt_once(&mut t.max_degree, line, key, parse_num(line, key, value)?)?,
                    "tol_root" => opt_once(&mut t.tol_root, line, key, parse_num(line, key, value)?)?,
                    "tol_classify" => opt_once(&mut t.tol_classify, line, key, parse_num(line, key, value)?)?,
                    "ball_radius" => opt_once(&mut t.ball_radius, line, key, parse_num(line, key, value)?)?,
                    "with_oracle" => opt_once(&mut t.with_oracle, line, key, parse_bool(line, value)?)?,
                    _ => return Err(unknown()),
                }
            }
            "burnside" => {
                if !is_name(key) {
                    return Err(at(line, format!("'{key}' is not a valid name")));
                }
                if raw.burnside.iter().any(|(_, n, _)| n == key) {
                    return Err(at(line, format!("name '{key}' defined twice")));
                }
                raw.burnside.push((line, key.to_string(), value.trim().to_string()));
            }
            _ => unreachable!("sections are checked above"),
        }
    }
    Ok(raw)
}

/// Parses and fully validates a description.
pub fn parse(text: &str) -> Result<Problem, Error> {
    let raw = scan(text)?;
    let variables: Vec<String> = match &raw.variables {
        Some((line, v)) => {
            let names: Vec<String> = v.split(',').map(|s| s.trim().to_string()).collect();
            if let Some(bad) = names.iter().find(|n| !is_name(n)) {
                return Err(at(*line, format!("'{bad}' is not a valid variable name")));
            }
            for (i, n) in names.iter().enumerate() {
                if names[..i].contains(n) {
                    return Err(at(*line, format!("variable '{n}' listed twice")));
                }
            }
            names
        }
        None => Vec::new(),
    };
    let n = variables.len();

    let group = match (&raw.factors, &raw.modulus) {
        (Some((line, _)), Some((mline, _))) => {
            return Err(at(
                (*line).max(*mline),
                "give either invariant_factors with generators or modulus with characters, not both",
            ))
        }
        (Some((_, factors)), None) => {
            if let Some((line, _)) = raw.characters.first() {
                return Err(at(*line, "'character' belongs to a diagonal group given by 'modulus'"));
            }
            Some(GroupSpec::Matrix {
                factors: factors.clone(),
                generators: raw.generators.iter().map(|(_, g)| g.clone()).collect(),
            })
        }
        (None, Some((_, modulus))) => {
            if let Some((line, _)) = raw.generators.first() {
                return Err(at(*line, "'generator' needs 'invariant_factors'"));
            }
            Some(GroupSpec::Diagonal {
                modulus: *modulus,
                characters: raw.characters.iter().map(|(_, c)| c.clone()).collect(),
            })
        }
        (None, None) => {
            if let Some(line) = raw
                .generators
                .first()
                .map(|g| g.0)
                .or(raw.characters.first().map(|c| c.0))
            {
                return Err(at(
                    line,
                    "group generators given without 'invariant_factors' or 'modulus'",
                ));
            }
            None
        }
    };

    let form = match (&raw.f, &raw.components) {
        (Some((l1, _)), Some((l2, _))) => return Err(at((*l1).max(*l2), "give exactly one of 'f' and 'components'")),
        (Some((line, text)), None) => Some(FormSpec::Function(
            Poly::parse(text, &variables).map_err(|e| at(*line, e))?,
        )),
        (None, Some((line, text))) => {
            let comps = text
                .split(';')
                .map(|c| Poly::parse(c, &variables).map_err(|e| at(*line, e)))
                .collect::<Result<Vec<_>, _>>()?;
            if comps.len() != n {
                return Err(at(*line, format!("{} components for {n} variables", comps.len())));
            }
            Some(FormSpec::Components(comps))
        }
        (None, None) => None,
    };

    let problem = Problem {
        variables,
        group,
        form,
        weights: raw.weights.as_ref().map(|(_, w)| w.clone()),
        degree: raw.degree.map(|(_, d)| d),
        task: raw.task.clone(),
        burnside: raw.burnside.iter().map(|(_, k, v)| (k.clone(), v.clone())).collect(),
    };
    validate(&problem, &raw)?;
    Ok(problem)
}

fn semantic(msg: impl fmt::Display) -> Error {
    Error::Parse(format!("semantic error: {msg}"))
}

fn validate(p: &Problem, raw: &Raw) -> Result<(), Error> {
    let n = p.variables.len();
    if p.form.is_some() && n == 0 {
        return Err(semantic("[form] needs [ring] variables"));
    }
    match &p.group {
        Some(GroupSpec::Matrix { generators, .. }) => {
            if generators.is_empty() && p.form.is_none() {
                p.abstract_group()?;
            } else {
                check_invariance(p, &p.matrix_action()?)?;
            }
        }
        Some(GroupSpec::Diagonal { .. }) => {
            let d = p.diagonal_action()?;
            if let Some(FormSpec::Function(f)) = &p.form {
                for (i, g) in d.generators().iter().enumerate() {
                    let moved = f
                        .terms()
                        .any(|(m, _)| m.exponents().iter().zip(g).map(|(k, a)| k * a).sum::<u32>() % d.modulus() != 0);
                    if moved {
                        return Err(semantic(format!("f is not invariant under generator {i}")));
                    }
                }
            }
        }
        None => {}
    }
    if let Some((line, w)) = &raw.weights {
        if w.len() != n {
            return Err(at(*line, format!("{} weights for {n} variables", w.len())));
        }
    }
    if !p.burnside.is_empty() {
        p.evaluate_burnside()?;
    }
    Ok(())
}

fn check_invariance(p: &Problem, action: &MatrixAction) -> Result<(), Error> {
    let res = match p.form.as_ref() {
        Some(FormSpec::Function(f)) => action.check_function(f),
        Some(FormSpec::Components(_)) => action.check_form(&p.one_form().expect("form present")),
        None => Ok(()),
    };
    res.map_err(|e| match e {
        Error::NotInvariant { generator } => {
            let what = if matches!(p.form, Some(FormSpec::Function(_))) {
                "f"
            } else {
                "the 1-form"
            };
            semantic(format!("{what} is not invariant under generator {generator}"))
        }
        other => semantic(other),
    })
}

impl Problem {
    pub fn nvars(&self) -> usize {
        self.variables.len()
    }

    pub fn abstract_group(&self) -> Result<AbelianGroup, Error> {
        match &self.group {
            None => Ok(AbelianGroup::trivial()),
            Some(GroupSpec::Matrix { factors, .. }) => AbelianGroup::new(factors.clone()).map_err(semantic),
            Some(GroupSpec::Diagonal { .. }) => Err(semantic(
                "a diagonal group has no invariant-factor presentation; give invariant_factors",
            )),
        }
    }

    /// Matrix action; a diagonal group is accepted only for modulus 1 or 2.
    pub fn matrix_action(&self) -> Result<MatrixAction, Error> {
        let n = self.nvars();
        match &self.group {
            None => Ok(MatrixAction::trivial(n)),
            Some(GroupSpec::Matrix { factors, generators }) => {
                let g = AbelianGroup::new(factors.clone()).map_err(semantic)?;
                MatrixAction::new(g, n, generators.clone()).map_err(semantic)
            }
            Some(GroupSpec::Diagonal { modulus, characters }) => {
                if *modulus > 2 {
                    return Err(semantic(format!(
                        "a diagonal group of modulus {modulus} does not act on real space; only 'quantum' accepts it"
                    )));
                }
                let gens = characters
                    .iter()
                    .map(|c| {
                        let d: Vec<Rational> = c
                            .iter()
                            .map(|&a| Rational::from_integer(if a % 2 == 0 { 1.into() } else { (-1).into() }))
                            .collect();
                        RationalMatrix::diagonal(&d)
                    })
                    .collect();
                let g = AbelianGroup::new(vec![2; characters.len()]).map_err(semantic)?;
                MatrixAction::new(g, n, gens).map_err(semantic)
            }
        }
    }

    pub fn diagonal_action(&self) -> Result<DiagonalAction, Error> {
        match &self.group {
            Some(GroupSpec::Diagonal { modulus, characters }) => {
                DiagonalAction::new(*modulus, self.nvars(), characters.clone()).map_err(semantic)
            }
            _ => Err(semantic("not a diagonal group")),
        }
    }

    pub fn function(&self) -> Result<&Poly, Error> {
        match &self.form {
            Some(FormSpec::Function(f)) => Ok(f),
            Some(FormSpec::Components(_)) => Err(semantic("this command needs a function 'f', not components")),
            None => Err(semantic("missing [form]")),
        }
    }

    pub fn one_form(&self) -> Result<OneForm, Error> {
        match &self.form {
            Some(FormSpec::Function(f)) => Ok(OneForm::differential(f)),
            Some(FormSpec::Components(c)) => OneForm::new(c.clone()).map_err(semantic),
            None => Err(semantic("missing [form]")),
        }
    }

    pub fn burnside_ring(&self) -> Result<BurnsideRing, Error> {
        BurnsideRing::new(&self.abstract_group()?).map_err(semantic)
    }

    /// Values of the `[burnside]` entries, each name visible to later ones.
    pub fn evaluate_burnside(&self) -> Result<(BurnsideRing, Vec<(String, BurnsideElement)>), Error> {
        let ring = self.burnside_ring()?;
        let mut env = BTreeMap::new();
        let mut out = Vec::new();
        for (name, text) in &self.burnside {
            let v = ring
                .parse(text, &env)
                .map_err(|e| semantic(format!("[burnside] {name}: {e}")))?;
            env.insert(name.clone(), v.clone());
            out.push((name.clone(), v));
        }
        Ok((ring, out))
    }
}

fn join<T: fmt::Display>(xs: &[T]) -> String {
    xs.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")
}

/// Canonical text; [`parse`] of it gives back an equal [`Problem`].
impl fmt::Display for Problem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut blocks: Vec<String> = Vec::new();
        if !self.variables.is_empty() {
            blocks.push(format!("[ring]\nvariables = {}\n", self.variables.join(", ")));
        }
        match &self.group {
            Some(GroupSpec::Matrix { factors, generators }) => {
                let mut s = format!("[group]\ninvariant_factors = {}\n", join(factors));
                for g in generators {
                    s += &format!("generator = {g}\n");
                }
                blocks.push(s);
            }
            Some(GroupSpec::Diagonal { modulus, characters }) => {
                let mut s = format!("[group]\nmodulus = {modulus}\n");
                for c in characters {
                    s += &format!("character = {}\n", join(c));
                }
                blocks.push(s);
            }
            None => {}
        }
        let mut form = String::new();
        match &self.form {
            Some(FormSpec::Function(p)) => form += &format!("f = {}\n", p.display_with(&self.variables)),
            Some(FormSpec::Components(c)) => {
                let parts: Vec<String> = c.iter().map(|p| p.display_with(&self.variables)).collect();
                form += &format!("components = {}\n", parts.join("; "));
            }
            None => {}
        }
        if let Some(w) = &self.weights {
            form += &format!("weights = {}\n", join(w));
        }
        if let Some(d) = self.degree {
            form += &format!("degree = {d}\n");
        }
        if !form.is_empty() {
            blocks.push(format!("[form]\n{form}"));
        }
        let t = &self.task;
        let mut task = String::new();
        let mut line = |k: &str, v: Option<String>| {
            if let Some(v) = v {
                task += &format!("{k} = {v}\n");
            }
        };
        line("command", t.command.clone());
        line("seed", t.seed.map(|x| x.to_string()));
        line("t", t.t.as_ref().map(fmt_rational));
        line("max_degree", t.max_degree.map(|x| x.to_string()));
        line("tol_root", t.tol_root.map(|x| x.to_string()));
        line("tol_classify", t.tol_classify.map(|x| x.to_string()));
        line("ball_radius", t.ball_radius.map(|x| x.to_string()));
        line("with_oracle", t.with_oracle.map(|x| x.to_string()));
        if !task.is_empty() {
            blocks.push(format!("[task]\n{task}"));
        }
        if !self.burnside.is_empty() {
            let mut s = "[burnside]\n".to_string();
            for (k, v) in &self.burnside {
                s += &format!("{k} = {v}\n");
            }
            blocks.push(s);
        }
        write!(f, "{}", blocks.join("\n"))
    }
}
