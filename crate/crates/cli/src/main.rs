mod commands;
mod report;

use clap::{Args, CommandFactory, Parser, Subcommand, ValueEnum};
use std::path::PathBuf;
use std::process::ExitCode;

/// Exact checks for fundamental groups of rational homology disk smoothings.
#[derive(Parser, Debug)]
#[command(name = "qhd", version)]
struct Cli {
    /// Directory with fixture overrides; missing files fall back to the bundled copies.
    #[arg(long, global = true, env = "QHD_DATA", value_name = "DIR")]
    data: Option<PathBuf>,
    /// Human-readable tables instead of JSON.
    #[arg(long, global = true)]
    pretty: bool,
    /// Include wall-clock timing in the report.
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Finitely presented groups: order, abelianization, subgroup index.
    Group(GroupArgs),
    /// Zariski–van Kampen presentations from arrangement or braid data.
    Zvk(ZvkArgs),
    /// The monomial matrix group for a given m.
    Matgroup(MatgroupArgs),
    /// Resolution graphs of the singularity families.
    Graph(GraphArgs),
    /// First homology of a blow-up model complement.
    H1(H1Args),
    /// Polynomial utilities.
    Poly(PolyArgs),
    /// End-to-end checks; exit code 2 if any check fails.
    Verify(VerifyArgs),
    /// Hirzebruch–Jung expansion of n/q.
    Hj(HjArgs),
}

#[derive(Args, Debug)]
struct GroupArgs {
    #[command(subcommand)]
    source: GroupSource,
    /// Coset budget for the enumeration.
    #[arg(long, default_value_t = 2_000_000, global = true)]
    max_cosets: usize,
}

#[derive(Subcommand, Debug)]
enum GroupSource {
    /// ⟨a, ℓ | a^{2(p+2)(p+3)}, ℓ²a^{−(p+2)(p+3)}, ℓaℓ⁻¹a^{2p+5}⟩
    B23 {
        #[arg(long)]
        p: u32,
    },
    /// A presentation document `{"gens": [...], "relators": [...]}`.
    File {
        path: PathBuf,
        /// Also report the index of the subgroup generated by these words.
        #[arg(long, value_delimiter = ',')]
        subgroup: Vec<String>,
    },
}

#[derive(Args, Debug)]
struct ZvkArgs {
    #[command(subcommand)]
    source: ZvkSource,
}

#[derive(Subcommand, Debug)]
enum ZvkSource {
    /// Wiring-diagram presentation of a real line arrangement (default: the seven-line fixture).
    Arrangement { path: Option<PathBuf> },
    /// Presentation from braid monodromy data (default: the conic + cubic fixture).
    Monodromy { path: Option<PathBuf> },
    /// Image of a free-group word under a braid.
    Act {
        #[arg(long)]
        strands: usize,
        /// e.g. `s1*s2^-1`
        #[arg(long)]
        braid: String,
        /// over generators x1..xn, e.g. `x1*x2^-1`
        #[arg(long)]
        word: String,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum VariantArg {
    G,
    GPrime,
}

#[derive(Args, Debug)]
struct MatgroupArgs {
    #[arg(long)]
    m: u32,
    #[arg(long, value_enum, default_value = "g")]
    variant: VariantArg,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FamilyArg {
    B23,
    C23,
    C33,
    Gnq,
    Seifert,
}

#[derive(Args, Debug)]
struct GraphArgs {
    #[arg(value_enum)]
    family: FamilyArg,
    /// Family parameter for b23, c23, c33.
    #[arg(long)]
    p: Option<u32>,
    /// Order of the cyclic group (gnq).
    #[arg(long)]
    n: Option<u64>,
    /// Weight parameter, 1 ≤ q ≤ n (gnq).
    #[arg(long)]
    q: Option<u64>,
    /// Long-arm parameter of the Seifert star.
    #[arg(long)]
    m: Option<u64>,
    /// Central weight of the Seifert star; solved for when omitted.
    #[arg(long)]
    d: Option<i64>,
    /// Include the discriminant group.
    #[arg(long)]
    discriminant: bool,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ModelArg {
    B23,
    C23,
    C33,
}

#[derive(Args, Debug)]
struct H1Args {
    #[arg(long, value_enum)]
    family: ModelArg,
    #[arg(long)]
    p: u32,
}

#[derive(Args, Debug)]
struct PolyArgs {
    #[command(subcommand)]
    op: PolyOp,
}

#[derive(Subcommand, Debug)]
enum PolyOp {
    /// Degree data of a polynomial, optionally weighted.
    Degree {
        expr: String,
        #[arg(long, value_delimiter = ',', default_value = "x,y,z")]
        vars: Vec<String>,
        #[arg(long, value_delimiter = ',')]
        weights: Vec<u64>,
    },
    /// Value at a rational point.
    Eval {
        expr: String,
        #[arg(long, value_delimiter = ',', default_value = "x,y,z")]
        vars: Vec<String>,
        /// Integer coordinates.
        #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
        at: Vec<i64>,
    },
    /// Lowest-order part after substituting a chart.
    Cone {
        expr: String,
        #[arg(long, value_delimiter = ',', default_value = "x,y,z")]
        vars: Vec<String>,
        /// One expression per variable, `;`-separated.
        #[arg(long)]
        chart: String,
        #[arg(long, value_delimiter = ',')]
        chart_vars: Vec<String>,
    },
    /// Exact quotient, if the divisor divides.
    Divide {
        expr: String,
        divisor: String,
        #[arg(long, value_delimiter = ',', default_value = "x,y,z")]
        vars: Vec<String>,
    },
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[command(subcommand)]
    target: VerifyTarget,
}

#[derive(Subcommand, Debug)]
enum VerifyTarget {
    B23 {
        #[arg(long)]
        p: u32,
    },
    C23 {
        #[arg(long)]
        p: u32,
    },
    C33 {
        #[arg(long)]
        p: u32,
    },
    Matgroup {
        #[arg(long)]
        m: u32,
    },
    Poly,
    All {
        #[arg(long, default_value_t = 3)]
        max_p: u32,
        #[arg(long, default_value_t = 5)]
        max_m: u32,
    },
}

#[derive(Args, Debug)]
struct HjArgs {
    n: u64,
    q: u64,
}

/// Help text of the deepest subcommand named on the command line, so that
/// usage errors come with the list of valid flags.
fn subcommand_help(args: impl Iterator<Item = String>) -> String {
    let mut cmd = Cli::command();
    for a in args {
        match cmd.find_subcommand(&a) {
            Some(sub) => cmd = sub.clone(),
            None if a.starts_with('-') => continue,
            None => {}
        }
    }
    cmd.render_help().to_string()
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let usage = e.use_stderr();
            let _ = e.print();
            if usage {
                eprintln!("\n{}", subcommand_help(std::env::args().skip(1)));
            }
            return ExitCode::from(if usage { 1 } else { 0 });
        }
    };
    match commands::run(&cli) {
        Ok(out) => {
            println!("{}", out.text);
            ExitCode::from(if out.ok { 0 } else { 2 })
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
