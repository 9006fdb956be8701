//! Command-line front end for `cohomix`. Every subcommand builds a report
//! struct which is rendered either as text or as JSON.

use std::fmt::Write as _;

use clap::{Args, Parser, Subcommand, ValueEnum};
use cohomix::algebra::{strip_cyclotomic_factors, IntegerPolynomial, Partition, Rational};
use cohomix::equivariant::{eq_schur_class, localization_rank_check, LaurentPoly};
use cohomix::filtration::{b2_regularity_verdict, hilb_betti, hilb_schur_basis, hilb_setup};
use cohomix::gotzmann::{
    degree_k_part, enumerate_hilb_fixed_points, jordan_regularity_check, monomial_to_string,
    nilpotent_matrix_on_rk, MonomialBasis, PartitionTriple,
};
use cohomix::grassmann::{
    equivariant_presentation, ordinary_presentation, poincare_from_cells,
    poincare_from_regular_sequence, w_degree, WeightSystem,
};
use cohomix::Error;
use indexmap::IndexMap;
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

#[derive(Debug, Parser)]
#[command(
    name = "cohomix",
    version,
    about = "Exact cohomology of Grassmannians and Hilbert schemes of points"
)]
pub struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Grassmannian presentations and Poincaré polynomials
    #[command(subcommand)]
    Grass(GrassCommand),
    /// Hilbert scheme of k points on the projective plane
    #[command(subcommand)]
    Hilb(HilbCommand),
    /// Regularity obstructions
    #[command(subcommand)]
    B2(B2Command),
    /// Equivariant classes and localization
    #[command(subcommand)]
    Eq(EqCommand),
}

#[derive(Debug, Clone, Copy, Args)]
pub struct Dims {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub k: usize,
}

#[derive(Debug, Clone, Copy, Args)]
pub struct HilbK {
    #[arg(long)]
    pub k: u32,
}

#[derive(Debug, Subcommand)]
pub enum GrassCommand {
    /// Generators and relations of the cohomology ring
    Presentation {
        #[command(flatten)]
        dims: Dims,
        #[arg(long)]
        equivariant: bool,
    },
    /// Poincaré polynomial in q = t^2
    Poincare {
        #[command(flatten)]
        dims: Dims,
        #[arg(long, value_enum, default_value_t = Method::Cells)]
        method: Method,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Cells,
    RegularSequence,
}

#[derive(Debug, Subcommand)]
pub enum HilbCommand {
    /// Torus-fixed points as partition triples
    FixedPoints(HilbK),
    /// Degree-k part of the ideal of one fixed point
    Embed {
        #[arg(long)]
        k: u32,
        /// Three ';'-separated partitions, e.g. "1;1;"
        #[arg(long, allow_hyphen_values = true)]
        triple: String,
    },
    /// Betti numbers from the Schur evaluation filtration
    Betti(HilbK),
    /// Schur partitions selected in each filtration degree
    SchurBasis(HilbK),
    /// Poincaré polynomial in t
    Poincare(HilbK),
}

#[derive(Debug, Subcommand)]
pub enum B2Command {
    /// Root-of-unity test on a Poincaré polynomial
    Check {
        /// Comma-separated coefficients, constant term first
        #[arg(long, allow_hyphen_values = true)]
        poincare: String,
    },
    /// Jordan type of the additive vector field on degree-k forms
    Jordan(HilbK),
}

#[derive(Debug, Subcommand)]
pub enum EqCommand {
    /// Rank of the restricted equivariant Schur classes
    Localization(HilbK),
    /// Restrictions of one equivariant Schur class to the fixed points
    Class {
        #[arg(long)]
        k: u32,
        /// Comma-separated parts; empty for the unit class
        #[arg(long, default_value = "")]
        mu: String,
    },
}

/// Failure of a command, mapped to a process exit code.
#[derive(Debug)]
pub enum CliError {
    Invalid(String),
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Invalid(_) => 2,
            CliError::Internal(_) => 3,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Invalid(m) => write!(f, "invalid input: {m}"),
            CliError::Internal(m) => write!(f, "internal error: {m}"),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::InternalInvariantViolation(_)
            | Error::IncompleteBasis(_)
            | Error::NotNilpotent
            | Error::NotSquare { .. } => CliError::Internal(e.to_string()),
            _ => CliError::Invalid(e.to_string()),
        }
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;

fn rational_string(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

fn small_coeffs(p: &IntegerPolynomial) -> CliResult<Vec<i64>> {
    p.coeffs()
        .iter()
        .map(|c| {
            i64::try_from(c).map_err(|_| CliError::Internal(format!("coefficient {c} overflows")))
        })
        .collect()
}

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(T::to_string).collect::<Vec<_>>().join(",")
}

fn hilb_k(k: u32) -> CliResult<u32> {
    if k == 0 {
        return Err(CliError::Invalid("k must be at least 1".into()));
    }
    Ok(k)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Variable {
    pub name: String,
    pub degree: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PresentationReport {
    pub n: usize,
    pub k: usize,
    pub equivariant: bool,
    pub variables: Vec<Variable>,
    pub relations: Vec<String>,
}

pub fn presentation_report(n: usize, k: usize, equivariant: bool) -> CliResult<PresentationReport> {
    if k == 0 || k >= n {
        return Err(Error::InvalidDimensions { n, k }.into());
    }
    let pres = if equivariant {
        equivariant_presentation(n, k)?
    } else {
        ordinary_presentation(n, k)?
    };
    Ok(PresentationReport {
        n,
        k,
        equivariant,
        variables: pres
            .variables
            .iter()
            .map(|(name, degree)| Variable {
                name: name.clone(),
                degree: *degree,
            })
            .collect(),
        relations: pres.relations.iter().map(ToString::to_string).collect(),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GrassPoincareReport {
    pub n: usize,
    pub k: usize,
    pub method: String,
    pub coefficients: Vec<i64>,
}

pub fn grass_poincare_report(n: usize, k: usize, method: Method) -> CliResult<GrassPoincareReport> {
    if k > n {
        return Err(Error::InvalidDimensions { n, k }.into());
    }
    let (p, name) = match method {
        Method::Cells => (poincare_from_cells(&WeightSystem::standard(n), k)?, "cells"),
        Method::RegularSequence => {
            let mut degrees = Vec::new();
            for i in 1..=n - k {
                for j in 1..=k {
                    degrees.push(w_degree(i, j, n, k)?);
                }
            }
            (
                poincare_from_regular_sequence(&degrees, 1)?,
                "regular-sequence",
            )
        }
    };
    Ok(GrassPoincareReport {
        n,
        k,
        method: name.into(),
        coefficients: small_coeffs(&p)?,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FixedPointsReport {
    pub k: u32,
    pub count: usize,
    pub fixed_points: Vec<String>,
}

pub fn fixed_points_report(k: u32) -> CliResult<FixedPointsReport> {
    let pts = enumerate_hilb_fixed_points(hilb_k(k)?);
    Ok(FixedPointsReport {
        k,
        count: pts.len(),
        fixed_points: pts.iter().map(ToString::to_string).collect(),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EmbedReport {
    pub k: u32,
    pub triple: String,
    pub indices: Vec<usize>,
    pub monomials: Vec<String>,
}

pub fn embed_report(k: u32, triple: &str) -> CliResult<EmbedReport> {
    let k = hilb_k(k)?;
    let t: PartitionTriple = triple.parse()?;
    let w = degree_k_part(&t, k)?;
    let basis = MonomialBasis::new(k)?;
    Ok(EmbedReport {
        k,
        triple: t.to_string(),
        indices: w.indices().to_vec(),
        monomials: w
            .indices()
            .iter()
            .map(|&i| monomial_to_string(&basis.monomials()[i - 1]))
            .collect(),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiReport {
    pub betti: Vec<usize>,
    pub poincare_t: Vec<i64>,
    pub fixed_points: usize,
    pub basis: IndexMap<String, Vec<String>>,
}

fn basis_map(by_degree: &[Vec<Partition>]) -> IndexMap<String, Vec<String>> {
    by_degree
        .iter()
        .enumerate()
        .map(|(p, mus)| (p.to_string(), mus.iter().map(ToString::to_string).collect()))
        .collect()
}

pub fn betti_report(k: u32) -> CliResult<BettiReport> {
    let k = hilb_k(k)?;
    let table = hilb_betti(k)?;
    let basis = hilb_schur_basis(k)?;
    Ok(BettiReport {
        betti: table.betti.clone(),
        poincare_t: small_coeffs(&table.poincare_t())?,
        fixed_points: table.fixed_points,
        basis: basis_map(&basis.by_degree),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SchurBasisReport {
    pub k: u32,
    pub counts: Vec<usize>,
    pub basis: IndexMap<String, Vec<String>>,
}

pub fn schur_basis_report(k: u32) -> CliResult<SchurBasisReport> {
    let basis = hilb_schur_basis(hilb_k(k)?)?;
    Ok(SchurBasisReport {
        k,
        counts: basis.counts(),
        basis: basis_map(&basis.by_degree),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbPoincareReport {
    pub k: u32,
    pub poincare_t: Vec<i64>,
}

pub fn hilb_poincare_report(k: u32) -> CliResult<HilbPoincareReport> {
    let table = hilb_betti(hilb_k(k)?)?;
    Ok(HilbPoincareReport {
        k,
        poincare_t: small_coeffs(&table.poincare_t())?,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub poincare: Vec<String>,
    pub verdict: String,
    pub cyclotomic_factors: Vec<String>,
    pub residual: Vec<String>,
}

pub fn check_report(coeffs: &str) -> CliResult<CheckReport> {
    if coeffs.trim().is_empty() {
        return Err(CliError::Invalid("empty polynomial".into()));
    }
    let parsed = coeffs
        .split(',')
        .map(|c| {
            c.trim()
                .parse::<BigInt>()
                .map_err(|_| CliError::Invalid(format!("bad coefficient {c:?}")))
        })
        .collect::<CliResult<Vec<_>>>()?;
    let p = IntegerPolynomial::new(parsed);
    let verdict = b2_regularity_verdict(&p)?;
    let red = strip_cyclotomic_factors(&p);
    Ok(CheckReport {
        poincare: p.coeffs().iter().map(ToString::to_string).collect(),
        verdict: verdict.to_string(),
        cyclotomic_factors: red
            .removed
            .iter()
            .map(|(f, m)| {
                if *m == 1 {
                    f.to_string()
                } else {
                    format!("{f}^{m}")
                }
            })
            .collect(),
        residual: red
            .residual
            .coeffs()
            .iter()
            .map(ToString::to_string)
            .collect(),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct JordanReport {
    pub k: u32,
    pub jordan_type: String,
    pub regular: bool,
    pub basis: Vec<String>,
    pub matrix: Vec<Vec<String>>,
}

pub fn jordan_report(k: u32) -> CliResult<JordanReport> {
    let k = hilb_k(k)?;
    let check = jordan_regularity_check(k)?;
    let basis = MonomialBasis::x2_descending(k)?;
    let m = nilpotent_matrix_on_rk(&basis);
    Ok(JordanReport {
        k,
        jordan_type: check.jordan_type.to_string(),
        regular: check.regular,
        basis: basis.monomials().iter().map(monomial_to_string).collect(),
        matrix: m
            .row_iter()
            .map(|row| row.iter().map(rational_string).collect())
            .collect(),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LocalizationReport {
    pub k: u32,
    pub rank: usize,
    pub fixed_points: usize,
    pub full: bool,
}

pub fn localization_report(k: u32) -> CliResult<LocalizationReport> {
    let (points, ws, _) = hilb_setup(hilb_k(k)?)?;
    let r = localization_rank_check(&points, &ws)?;
    Ok(LocalizationReport {
        k,
        rank: r.rank,
        fixed_points: r.fixed_points,
        full: r.full,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Restriction {
    pub point: String,
    pub value: IndexMap<String, String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassReport {
    pub k: u32,
    pub mu: String,
    pub restrictions: Vec<Restriction>,
}

fn laurent_map(p: &LaurentPoly) -> IndexMap<String, String> {
    p.terms()
        .map(|(e, c)| (e.to_string(), rational_string(c)))
        .collect()
}

pub fn class_report(k: u32, mu: &str) -> CliResult<ClassReport> {
    let (points, ws, _) = hilb_setup(hilb_k(k)?)?;
    let mu: Partition = mu.parse()?;
    let class = eq_schur_class(&mu, &points, &ws)?;
    Ok(ClassReport {
        k,
        mu: mu.to_string(),
        restrictions: class
            .iter()
            .map(|(pt, val)| Restriction {
                point: pt.to_string(),
                value: laurent_map(val),
            })
            .collect(),
    })
}

/// Renders a report as canonical text.
pub trait Render {
    fn render(&self) -> String;
}

impl Render for PresentationReport {
    fn render(&self) -> String {
        let mut s = format!("variables ({}):\n", self.variables.len());
        for v in &self.variables {
            let _ = writeln!(s, "  {} {}", v.name, v.degree);
        }
        let _ = write!(s, "relations ({}):", self.relations.len());
        for r in &self.relations {
            let _ = write!(s, "\n  {r}");
        }
        s
    }
}

impl Render for GrassPoincareReport {
    fn render(&self) -> String {
        join(&self.coefficients)
    }
}

impl Render for FixedPointsReport {
    fn render(&self) -> String {
        let mut s = format!("{} fixed points", self.count);
        for t in &self.fixed_points {
            let _ = write!(s, "\n{t}");
        }
        s
    }
}

impl Render for EmbedReport {
    fn render(&self) -> String {
        format!(
            "indices: {}\nmonomials: {}",
            join(&self.indices),
            self.monomials.join(" ")
        )
    }
}

fn render_basis(s: &mut String, basis: &IndexMap<String, Vec<String>>) {
    for (p, mus) in basis {
        let shown: Vec<String> = mus.iter().map(|m| format!("({m})")).collect();
        let _ = write!(s, "\n  {p}: {}", shown.join(" "));
    }
}

impl Render for BettiReport {
    fn render(&self) -> String {
        let mut s = format!(
            "betti: {}\npoincare_t: {}\nfixed_points: {}\nbasis:",
            join(&self.betti),
            join(&self.poincare_t),
            self.fixed_points
        );
        render_basis(&mut s, &self.basis);
        s
    }
}

impl Render for SchurBasisReport {
    fn render(&self) -> String {
        let mut s = format!("counts: {}\nbasis:", join(&self.counts));
        render_basis(&mut s, &self.basis);
        s
    }
}

impl Render for HilbPoincareReport {
    fn render(&self) -> String {
        join(&self.poincare_t)
    }
}

impl Render for CheckReport {
    fn render(&self) -> String {
        self.verdict.clone()
    }
}

impl Render for JordanReport {
    fn render(&self) -> String {
        format!("\"{}\" regular={}", self.jordan_type, self.regular)
    }
}

impl Render for LocalizationReport {
    fn render(&self) -> String {
        format!(
            "rank {} of {} full={}",
            self.rank, self.fixed_points, self.full
        )
    }
}

impl Render for ClassReport {
    fn render(&self) -> String {
        let mut s = String::new();
        for r in &self.restrictions {
            let terms: Vec<String> = r
                .value
                .iter()
                .rev()
                .map(|(e, c)| {
                    let c = c.strip_suffix("/1").unwrap_or(c);
                    match e.as_str() {
                        "0" => c.to_string(),
                        "1" => format!("{c}*v"),
                        _ => format!("{c}*v^{e}"),
                    }
                })
                .collect();
            let shown = if terms.is_empty() {
                "0".into()
            } else {
                terms.join(" + ")
            };
            let _ = writeln!(s, "{}: {shown}", r.point);
        }
        s.pop();
        s
    }
}

fn emit<T: Serialize + Render>(report: T, format: Format) -> CliResult<String> {
    match format {
        Format::Text => Ok(report.render()),
        Format::Json => {
            serde_json::to_string_pretty(&report).map_err(|e| CliError::Internal(e.to_string()))
        }
    }
}

pub fn run(cli: &Cli) -> CliResult<String> {
    let f = cli.format;
    match &cli.command {
        Command::Grass(GrassCommand::Presentation { dims, equivariant }) => {
            emit(presentation_report(dims.n, dims.k, *equivariant)?, f)
        }
        Command::Grass(GrassCommand::Poincare { dims, method }) => {
            emit(grass_poincare_report(dims.n, dims.k, *method)?, f)
        }
        Command::Hilb(HilbCommand::FixedPoints(a)) => emit(fixed_points_report(a.k)?, f),
        Command::Hilb(HilbCommand::Embed { k, triple }) => emit(embed_report(*k, triple)?, f),
        Command::Hilb(HilbCommand::Betti(a)) => emit(betti_report(a.k)?, f),
        Command::Hilb(HilbCommand::SchurBasis(a)) => emit(schur_basis_report(a.k)?, f),
        Command::Hilb(HilbCommand::Poincare(a)) => emit(hilb_poincare_report(a.k)?, f),
        Command::B2(B2Command::Check { poincare }) => emit(check_report(poincare)?, f),
        Command::B2(B2Command::Jordan(a)) => emit(jordan_report(a.k)?, f),
        Command::Eq(EqCommand::Localization(a)) => emit(localization_report(a.k)?, f),
        Command::Eq(EqCommand::Class { k, mu }) => emit(class_report(*k, mu)?, f),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rationals_always_carry_a_denominator() {
        assert_eq!(rational_string(&Rational::from_integer(3.into())), "3/1");
        assert_eq!(
            rational_string(&Rational::new((-2).into(), 4.into())),
            "-1/2"
        );
    }

    #[test]
    fn error_classes() {
        let e: CliError = Error::InternalInvariantViolation("x".into()).into();
        assert_eq!(e.exit_code(), 3);
        let e: CliError = Error::InvalidDimensions { n: 2, k: 3 }.into();
        assert_eq!(e.exit_code(), 2);
    }

    #[test]
    fn empty_polynomial_is_invalid() {
        assert_eq!(check_report("").unwrap_err().exit_code(), 2);
        assert_eq!(check_report("0,0").unwrap_err().exit_code(), 2);
        assert_eq!(check_report("1,x").unwrap_err().exit_code(), 2);
    }
}
