use std::io::Write;
use std::process::ExitCode;
use std::time::Instant;

use apolar::apolarity::{ann_basis_with, hilbert_vector_with, is_standard_with};
use apolar::complex::{face_poset, minimal_nonfaces, s_counts, skeleton_count, to_dot, zeta_of};
use apolar::generators::{extract_generators_with, verify_generators, ExtractOptions};
use apolar::locus::{
    component_records, components_csv, enumerate_admissible_supports, gcd_condition, phi_report,
    psi_report, st_conditions, SupportSet,
};
use apolar::perazzo::{
    build_perazzo, conjecture_sample_check, degree2_census, full_perazzo_hilbert, h2_of,
    PerazzoSpec, SamplingOptions,
};
use apolar::rng::Probability;
use apolar::text::{format_polynomial, parse_polynomial_with, VariableNames};
use apolar::{Convention, Error, Limits, Polynomial};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(
    name = "apolar",
    version,
    about = "Annihilators and Hilbert vectors via apolarity"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Hilbert vector and standardness of Q/Ann(f).
    Hilbert {
        #[command(flatten)]
        poly: PolyArgs,
        #[arg(long, value_enum, default_value_t = ConventionArg::Dual)]
        convention: ConventionArg,
    },
    /// Canonical basis of Ann(f) in one degree.
    Ann {
        #[command(flatten)]
        poly: PolyArgs,
        #[arg(long)]
        degree: u32,
        #[arg(long, value_enum, default_value_t = ConventionArg::Dual)]
        convention: ConventionArg,
    },
    /// Structured generators of Ann(f) for a coefficient-1 form.
    Generators {
        #[command(flatten)]
        poly: PolyArgs,
        /// Highest degree searched for difference generators.
        #[arg(long)]
        max_difference_degree: Option<u32>,
        /// Largest candidate set whose subsets are searched for differences.
        #[arg(long, default_value_t = Limits::default().max_subset_monomials)]
        max_subset_monomials: usize,
    },
    /// The monomial cell complex of f.
    Cw {
        #[command(flatten)]
        poly: PolyArgs,
        #[arg(long, value_enum)]
        export: Option<Export>,
    },
    #[command(subcommand)]
    Locus(LocusCommand),
    #[command(subcommand)]
    Perazzo(PerazzoCommand),
    /// Sample standard forms and compare with the full Perazzo Hilbert vector.
    Conjecture {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: u32,
        #[arg(long)]
        trials: u64,
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Probability of keeping each monomial in a sampled support.
        #[arg(long, default_value_t = 0.5)]
        inclusion: f64,
        #[arg(long, default_value_t = 50)]
        retry_cap: u32,
        /// Add `runtime_ms` to the report (makes output run-dependent).
        #[arg(long)]
        timing: bool,
        #[command(flatten)]
        limits: MatrixLimit,
    },
}

#[derive(Subcommand)]
enum LocusCommand {
    /// Catalog of supports satisfying st.A, st.B and st.C.
    Enumerate {
        #[arg(long)]
        nvars: usize,
        #[arg(long)]
        degree: u32,
        /// Largest tau(n,d) accepted.
        #[arg(long, default_value_t = Limits::default().max_locus_tau)]
        guard: usize,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Support conditions and linear-algebra standardness of one support.
    Stcheck {
        /// Polynomial whose support is checked; coefficients are ignored.
        #[arg(long)]
        support: String,
        #[arg(long)]
        nvars: usize,
    },
    /// Kernel dimensions of the phi and psi maps against their closed forms.
    Maps {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: u32,
        #[command(flatten)]
        limits: MatrixLimit,
    },
}

#[derive(Subcommand)]
enum PerazzoCommand {
    Build(PerazzoArgs),
    Hilbert(PerazzoArgs),
    Census(PerazzoArgs),
}

#[derive(Args)]
struct PerazzoArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    d: u32,
    #[command(flatten)]
    limits: MatrixLimit,
}

#[derive(Args)]
struct PolyArgs {
    #[arg(long)]
    poly: String,
    /// Total number of variables.
    #[arg(long)]
    nvars: usize,
    /// How many of the variables (the last ones) are named u1..uM.
    #[arg(long, default_value_t = 0)]
    uvars: usize,
    #[command(flatten)]
    limits: MatrixLimit,
}

#[derive(Args, Clone, Copy)]
struct MatrixLimit {
    /// Largest row or column count of any matrix built.
    #[arg(long, default_value_t = Limits::default().max_matrix_dim)]
    max_matrix_dim: usize,
}

impl MatrixLimit {
    fn limits(self) -> Limits {
        Limits {
            max_matrix_dim: self.max_matrix_dim,
            ..Limits::default()
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ConventionArg {
    Dual,
    Diff,
}

impl From<ConventionArg> for Convention {
    fn from(c: ConventionArg) -> Self {
        match c {
            ConventionArg::Dual => Convention::Contraction,
            ConventionArg::Diff => Convention::Differentiation,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Export {
    Dot,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

enum Output {
    Json(Value),
    Text(String),
}

impl PolyArgs {
    fn names(&self) -> Result<VariableNames, Error> {
        if self.uvars > self.nvars {
            return Err(Error::InvalidArgument("--uvars exceeds --nvars".into()));
        }
        Ok(VariableNames::split(self.nvars - self.uvars, self.uvars))
    }

    fn parse(&self) -> Result<(Polynomial, VariableNames), Error> {
        let names = self.names()?;
        Ok((parse_polynomial_with(&self.poly, &names)?, names))
    }
}

fn versioned(mut v: Value) -> Value {
    v["schema_version"] = json!(1);
    v
}

fn run(cli: Cli) -> Result<Output, Error> {
    let out = match cli.command {
        Command::Hilbert { poly, convention } => {
            let (f, _) = poly.parse()?;
            let conv = convention.into();
            let h = hilbert_vector_with(&f, conv, &poly.limits.limits())?;
            json!({
                "hilbert": h,
                "standard": is_standard_with(&f, conv)?,
                "socle_degree": f.degree(),
            })
        }
        Command::Ann {
            poly,
            degree,
            convention,
        } => {
            let (f, names) = poly.parse()?;
            let basis = ann_basis_with(&f, degree, convention.into(), &poly.limits.limits())?;
            let dual = names.dual();
            let basis: Vec<String> = basis.iter().map(|b| format_polynomial(b, &dual)).collect();
            json!({"degree": degree, "dimension": basis.len(), "basis": basis})
        }
        Command::Generators {
            poly,
            max_difference_degree,
            max_subset_monomials,
        } => {
            let (f, names) = poly.parse()?;
            let opts = ExtractOptions {
                max_difference_degree,
                limits: Limits {
                    max_subset_monomials,
                    ..poly.limits.limits()
                },
            };
            let g = extract_generators_with(&f, &opts)?;
            let verified = verify_generators(&f, &g)?;
            json!({"generators": g.describe(&names), "count": g.len(), "verified": verified})
        }
        Command::Cw { poly, export } => {
            let (f, names) = poly.parse()?;
            let c = zeta_of(&f)?;
            match export {
                Some(Export::Dot) => return Ok(Output::Text(to_dot(&c, &names))),
                Some(Export::Json) => json!({"face_poset": face_poset(&c, &names)}),
                None => {
                    let d = f.degree();
                    let skeleta: Vec<usize> = (0..d).map(|k| skeleton_count(&c, k)).collect();
                    let mut nonfaces = serde_json::Map::new();
                    for j in 1..=d + 1 {
                        let ms = minimal_nonfaces(&c, j)?;
                        if !ms.is_empty() {
                            let dual = names.dual();
                            let ms: Vec<String> = ms
                                .into_iter()
                                .map(|m| format_polynomial(&Polynomial::monomial(m), &dual))
                                .collect();
                            nonfaces.insert(j.to_string(), json!(ms));
                        }
                    }
                    json!({
                        "s_counts": s_counts(&c, d),
                        "skeleton_counts": skeleta,
                        "minimal_nonfaces": nonfaces,
                    })
                }
            }
        }
        Command::Locus(LocusCommand::Enumerate {
            nvars,
            degree,
            guard,
            format,
        }) => {
            let limits = Limits {
                max_locus_tau: guard,
                ..Limits::default()
            };
            let comps = enumerate_admissible_supports(nvars, degree, &limits)?;
            match format {
                Format::Csv => return Ok(Output::Text(components_csv(&comps))),
                Format::Json => json!({
                    "nvars": nvars,
                    "degree": degree,
                    "components": component_records(&comps),
                }),
            }
        }
        Command::Locus(LocusCommand::Stcheck { support, nvars }) => {
            let f = parse_polynomial_with(&support, &VariableNames::plain(nvars))?;
            let s = SupportSet::of(&f)?;
            let ones = s.polynomial()?;
            let st = st_conditions(&s);
            json!({
                "st_a": st.st_a,
                "st_b": st.st_b,
                "st_c": st.st_c,
                "admissible": st.all(),
                "gcd_condition": gcd_condition(&s),
                "standard": is_standard_with(&ones, Convention::Contraction)?,
            })
        }
        Command::Locus(LocusCommand::Maps { n, d, limits }) => {
            let limits = limits.limits();
            let mut maps = vec![serde_json::to_value(phi_report(n, d, &limits)?).unwrap()];
            if d >= 3 {
                maps.push(serde_json::to_value(psi_report(n, d, &limits)?).unwrap());
            }
            json!({"maps": maps})
        }
        Command::Perazzo(cmd) => {
            let (args, kind) = match cmd {
                PerazzoCommand::Build(a) => (a, "build"),
                PerazzoCommand::Hilbert(a) => (a, "hilbert"),
                PerazzoCommand::Census(a) => (a, "census"),
            };
            let spec = PerazzoSpec::full(args.n, args.d);
            let f = build_perazzo(&spec)?;
            let limits = args.limits.limits();
            match kind {
                "build" => json!({
                    "polynomial": format_polynomial(&f, &spec.names()),
                    "x_count": spec.x_count(),
                    "u_count": args.n,
                    "degree": args.d,
                }),
                "hilbert" => json!({"hilbert": full_perazzo_hilbert(args.n, args.d, &limits)?}),
                _ => json!({
                    "census": degree2_census(&f, &limits)?,
                    "h2": h2_of(&f)?,
                }),
            }
        }
        Command::Conjecture {
            n,
            d,
            trials,
            seed,
            jobs,
            inclusion,
            retry_cap,
            timing,
            limits,
        } => {
            let opts = SamplingOptions {
                inclusion: Probability::new(inclusion)?,
                retry_cap,
                jobs,
                limits: limits.limits(),
                ..SamplingOptions::default()
            };
            let start = Instant::now();
            let mut report = conjecture_sample_check(n, d, trials, seed, &opts)?;
            if timing {
                report.runtime_ms = Some(start.elapsed().as_millis() as u64);
            }
            serde_json::to_value(report).unwrap()
        }
    };
    Ok(Output::Json(versioned(out)))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let text = match run(cli) {
        Ok(Output::Json(v)) => serde_json::to_string_pretty(&v).unwrap() + "\n",
        Ok(Output::Text(s)) => s,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(match e {
                Error::Guard { .. } => 2,
                Error::Internal(_) => 3,
                _ => 1,
            });
        }
    };
    // A closed pipe (e.g. `| head`) is not an error worth reporting.
    let _ = std::io::stdout().lock().write_all(text.as_bytes());
    ExitCode::SUCCESS
}
