use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use kunz_core::constructions::{self, ConstructionSpec};
use kunz_core::kunzcone::{self, Convention};
use kunz_core::nilsemigroup::{apery_certificate, apery_witness_from_interior, is_apery, AperyVerdict, CheckStrategy, KunzNilsemigroup};
use kunz_core::numsemigroup::NumericalSemigroup;
use kunz_core::{clear_denominators, KunzError, Rational, Result};
use serde_json::{json, Value};

mod input;
mod report;

/// Apéry faces of the Kunz cone: verdicts, face reports, census, constructions.
#[derive(Debug, Parser)]
#[command(name = "kunz", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Dot,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Family {
    Full,
    B,
    BEven,
    C,
    Arithmetical,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Decide whether a nilsemigroup's face is Apéry: {"m":..,"sums":[[a,b,c],..]}
    Apery {
        /// Inline JSON, a file path, or `-` for stdin.
        input: String,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Report the face containing a semigroup or point.
    Face {
        /// Generators, e.g. 6,7,8,9.
        #[arg(long, conflicts_with_all = ["point", "input"])]
        gens: Option<String>,
        /// Point coordinates x_1..x_{m-1}, e.g. 7,8,9,16,17 or 7/2,7.
        #[arg(long, conflicts_with = "input")]
        point: Option<String>,
        /// {"generators":[..]} or {"m":..,"x":[..]}: inline, a path, or `-`.
        #[arg(long)]
        input: Option<String>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Census of non-Apéry faces of C_m by dimension.
    Enumerate {
        #[arg(long)]
        m: u32,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
        /// Count degenerate faces as non-Apéry (CSV) or list them (--faces).
        #[arg(long)]
        include_degenerate: bool,
        /// List faces instead of the census.
        #[arg(long)]
        faces: bool,
        /// Largest m to attempt; defaults to KUNZ_MAX_M or 12.
        #[arg(long)]
        max_m: Option<u32>,
    },
    /// Build one of the explicit faces with prescribed (e, d).
    Construct {
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long)]
        m: u32,
        #[arg(long)]
        k: Option<u32>,
        #[arg(long)]
        e: Option<u32>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Recompute every pinned example and report each fact.
    Gallery {
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

/// Failures surfaced to the user, with their exit codes.
enum Failure {
    Library(KunzError),
    Unsupported(String),
    GalleryMismatch(String),
}

impl From<KunzError> for Failure {
    fn from(e: KunzError) -> Self {
        Failure::Library(e)
    }
}

impl Failure {
    fn exit_code(&self) -> u8 {
        match self {
            Failure::Library(KunzError::ResourceLimit { .. }) => 2,
            Failure::Library(e) if e.is_input_error() => 1,
            Failure::Library(_) | Failure::GalleryMismatch(_) => 3,
            Failure::Unsupported(_) => 1,
        }
    }

    fn diagnostic(&self) -> String {
        let kind = match self.exit_code() {
            1 => "input",
            2 => "resource",
            _ => "internal",
        };
        let message = match self {
            Failure::Library(e) => e.to_string(),
            Failure::Unsupported(s) | Failure::GalleryMismatch(s) => s.clone(),
        };
        format!("error: {kind}: {}", message.replace('\n', " "))
    }
}

fn unsupported(format: Format, command: &str) -> Failure {
    Failure::Unsupported(format!("format {format:?} is not available for `{command}`"))
}

fn json_line(v: &Value) -> String {
    let mut s = serde_json::to_string(v).expect("values serialize");
    s.push('\n');
    s
}

/// Uses the caller's interior point for the witness when the face is Apéry.
fn verdict_for(n: &KunzNilsemigroup, interior: &[kunz_core::Int]) -> Result<AperyVerdict> {
    match apery_certificate(n, CheckStrategy::default()) {
        None => Ok(AperyVerdict::Apery { witness: apery_witness_from_interior(n, interior)? }),
        Some(certificate) => Ok(AperyVerdict::NotApery { certificate }),
    }
}

fn run_apery(input: &str, format: Format) -> std::result::Result<String, Failure> {
    let doc: input::NilsemigroupInput = input::from_value(input::read_document(input)?, "nilsemigroup")?;
    let sums: Vec<(u32, u32, u32)> = doc.sums.iter().map(|&[a, b, c]| (a, b, c)).collect();
    let n = KunzNilsemigroup::from_tight_sums(doc.m, &sums)?;
    let verdict = is_apery(&n)?;
    match format {
        Format::Json => {
            let mut v = report::nilsemigroup(&n);
            v.as_object_mut().expect("object").extend(report::verdict(&verdict).as_object().expect("object").clone());
            Ok(json_line(&v))
        }
        Format::Text => Ok(report::nilsemigroup_text(&n) + &report::verdict_text(&verdict)),
        Format::Dot => Ok(n.to_dot()),
        Format::Csv => Err(unsupported(format, "apery")),
    }
}

fn run_face(gens: Option<String>, point: Option<String>, doc: Option<String>, format: Format) -> std::result::Result<String, Failure> {
    let coordinates: Vec<Rational> = match (gens, point, doc) {
        (Some(g), _, _) => semigroup_point(&input::parse_generators(&g)?)?,
        (None, Some(p), _) => input::split_list(&p).into_iter().map(input::parse_rational).collect::<Result<_>>()?,
        (None, None, Some(d)) => {
            let v = input::read_document(&d)?;
            if v.get("generators").is_some() {
                let s: input::SemigroupInput = input::from_value(v, "semigroup")?;
                semigroup_point(&s.generators)?
            } else {
                let p: input::PointInput = input::from_value(v, "point")?;
                p.coordinates()?
            }
        }
        (None, None, None) => return Err(Failure::Unsupported("one of --gens, --point, --input is required".into())),
    };
    let x = clear_denominators(&coordinates);
    let face = kunzcone::face_of_point(&x)?;
    let n = face.nilsemigroup.as_ref().expect("positive points give non-degenerate faces");
    let verdict = verdict_for(n, &x)?;
    match format {
        Format::Json => Ok(json_line(&json!({
            "face": report::face(&face),
            "embedding_dimension": n.embedding_dimension(),
            "nilsemigroup": report::nilsemigroup(n),
            "apery": report::verdict(&verdict),
            "dot": n.to_dot(),
        }))),
        Format::Text => Ok(format!(
            "{}embedding dimension: {}\n{}{}\n{}",
            report::face_text(&face),
            n.embedding_dimension(),
            report::nilsemigroup_text(n),
            report::verdict_text(&verdict).trim_end(),
            n.to_dot()
        )),
        Format::Dot => Ok(n.to_dot()),
        Format::Csv => Err(unsupported(format, "face")),
    }
}

fn semigroup_point(gens: &[u64]) -> Result<Vec<Rational>> {
    let s = NumericalSemigroup::from_generators(gens)?;
    Ok(s.apery_tuple().as_point().into_iter().map(Rational::from_integer).collect())
}

fn run_enumerate(m: u32, format: Format, include_degenerate: bool, faces: bool, max_m: Option<u32>) -> std::result::Result<String, Failure> {
    let limit = max_m.unwrap_or_else(kunzcone::max_m_from_env);
    kunzcone::check_resource_limit(m, limit)?;
    let cone = kunzcone::build_cone(m)?;
    if faces {
        let list = kunzcone::enumerate_faces_with_limit(&cone, include_degenerate, limit)?;
        return match format {
            Format::Json => Ok(json_line(&Value::Array(list.iter().map(report::face).collect()))),
            Format::Csv => {
                let mut s = String::from("dim,degenerate,equalities\n");
                for f in &list {
                    let eqs: Vec<String> = f.equality_set.iter().map(|(i, j)| format!("{i}+{j}")).collect();
                    s.push_str(&format!("{},{},{}\n", f.dim, f.degenerate, eqs.join(" ")));
                }
                Ok(s)
            }
            _ => Err(unsupported(format, "enumerate --faces")),
        };
    }
    let census = kunzcone::census::classify_with_limit(&cone, limit)?;
    let convention = if include_degenerate { Convention::IncludeDegenerate } else { Convention::ExcludeDegenerate };
    match format {
        Format::Csv => Ok(census.to_csv(convention)),
        Format::Json => Ok(json_line(&serde_json::to_value(&census).expect("census serializes"))),
        _ => Err(unsupported(format, "enumerate")),
    }
}

fn run_construct(family: Family, m: u32, k: Option<u32>, e: Option<u32>, format: Format) -> std::result::Result<String, Failure> {
    let need = |v: Option<u32>, name: &str| v.ok_or_else(|| Failure::Unsupported(format!("--{name} is required for this family")));
    let spec = match family {
        Family::Full => ConstructionSpec::Full { m },
        Family::B => ConstructionSpec::B { m, k: need(k, "k")? },
        Family::BEven => ConstructionSpec::BEven { m },
        Family::C => ConstructionSpec::C { m, e: need(e, "e")?, k: need(k, "k")? },
        Family::Arithmetical => ConstructionSpec::Arithmetical { m, e: need(e, "e")? },
    };
    let c = constructions::construct(spec)?;
    let n = c.face.nilsemigroup.as_ref().expect("constructions are non-degenerate");
    match format {
        Format::Json => Ok(json_line(&json!({
            "point": report::ints(&c.point),
            "face": report::face(&c.face),
            "report": serde_json::to_value(&c.report).expect("reports serialize"),
        }))),
        Format::Text => {
            let point: Vec<String> = c.point.iter().map(|x| x.to_string()).collect();
            let mut s = format!("spec: {spec:?}\npoint: ({})\n", point.join(", "));
            s += &report::face_text(&c.face);
            s += &format!("embedding dimension: {}\napery: {}\n", c.report.embedding_dimension, c.report.apery);
            if let Some(ok) = c.report.lattice_product {
                s += &format!("lattice product: {ok}\n");
            }
            Ok(s)
        }
        Format::Dot => Ok(n.to_dot()),
        Format::Csv => Err(unsupported(format, "construct")),
    }
}

fn run_gallery(format: Format) -> std::result::Result<String, Failure> {
    let mut failed = Vec::new();
    let mut text = String::new();
    let mut entries = Vec::new();
    for entry in constructions::gallery() {
        let facts = entry.run()?;
        for f in &facts {
            text += &format!("{} {}: {}\n", if f.holds { "PASS" } else { "FAIL" }, entry.name, f.claim);
            if !f.holds {
                failed.push(format!("{}: {}", entry.name, f.claim));
            }
        }
        entries.push(json!({ "name": entry.name, "summary": entry.summary, "facts": facts }));
    }
    let out = match format {
        Format::Text => text,
        Format::Json => json_line(&Value::Array(entries)),
        _ => return Err(unsupported(format, "gallery")),
    };
    if failed.is_empty() {
        Ok(out)
    } else {
        print!("{out}");
        Err(Failure::GalleryMismatch(format!("gallery facts failed: {}", failed.join("; "))))
    }
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
    let result = match cli.command {
        Command::Apery { input, format } => run_apery(&input, format),
        Command::Face { gens, point, input, format } => run_face(gens, point, input, format),
        Command::Enumerate { m, format, include_degenerate, faces, max_m } => run_enumerate(m, format, include_degenerate, faces, max_m),
        Command::Construct { family, m, k, e, format } => run_construct(family, m, k, e, format),
        Command::Gallery { format } => run_gallery(format),
    };
    match result {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(f) => {
            eprintln!("{}", f.diagnostic());
            ExitCode::from(f.exit_code())
        }
    }
}
