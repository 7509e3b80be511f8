use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use betti_core::bounds::{self, LemmaGrid, LemmaId};
use betti_core::decompose::{check_codim, greedy_decompose, recompose};
use betti_core::diagram::{pi, pi_all, sum_pi, DegreeSequence};
use betti_core::formats::{to_pretty, DecompositionFile, DiagramFile};
use betti_core::polycert::{self, Verdict};
use betti_core::verify::{self, EnumSpec, VerifyReport};
use betti_core::Rat;
use clap::{Args, Parser, Subcommand};
use serde_json::json;

mod range;

use range::IntRange;

/// Exact Betti number numerics: Herzog-Kuhl numbers, Boij-Soderberg
/// decomposition, bound functions and their verification.
#[derive(Parser)]
#[command(name = "betti", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Herzog-Kuhl numbers pi_i(D) of a degree sequence.
    Pi {
        /// Comma-separated degrees, starting at 0.
        #[arg(long, allow_hyphen_values = true)]
        degrees: String,
        /// Print only pi_k.
        #[arg(long)]
        index: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Greedy Boij-Soderberg decomposition of a diagram file.
    Decompose {
        #[arg(long)]
        input: PathBuf,
        /// Write the decomposition here instead of stdout.
        #[arg(long)]
        output: Option<PathBuf>,
        /// Warn about summands whose length lies outside [c+1, n+1].
        #[arg(long)]
        codim: Option<usize>,
        /// Recompose and require an exact match with the input.
        #[arg(long)]
        check: bool,
        /// Show the input diagram on stderr, rows indexed by j - i.
        #[arg(long)]
        rows: bool,
    },
    /// The bound functions F, G, G1.
    Bounds {
        #[command(subcommand)]
        command: BoundsCommand,
    },
    /// Exhaustive checks of the lower bounds over a bounded family of sequences.
    Verify {
        #[command(subcommand)]
        command: VerifyCommand,
    },
    /// Polynomial certificate for the total bound in length n.
    Certify {
        #[arg(long, value_parser = clap::value_parser!(u8).range(3..=5))]
        n: u8,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Subcommand)]
enum BoundsCommand {
    /// F(a,b,e,n,i) as an exact fraction.
    Eval {
        #[arg(long)]
        a: i64,
        #[arg(long)]
        b: i64,
        #[arg(long)]
        e: i64,
        #[arg(long)]
        n: i64,
        #[arg(long)]
        i: i64,
    },
    /// F(a,b,e,n,i) for every n in a range.
    Sweep {
        #[arg(long)]
        a: i64,
        #[arg(long)]
        b: i64,
        #[arg(long)]
        e: i64,
        #[arg(long)]
        i: i64,
        /// For example 20..60.
        #[arg(long)]
        n: IntRange,
        #[arg(long)]
        json: bool,
    },
    /// The values behind the numbered direct computations.
    Table,
    /// Check the monotonicity lemmas over a grid.
    Lemmas(LemmaArgs),
    /// F(2,0,2,5,3) against F(2,0,2,6,3).
    Sharpness,
}

#[derive(Args)]
struct LemmaArgs {
    /// Check one lemma (Fa, Fn, Fbe0, Gi, Gbe2, G1e, G1n9); all by default.
    #[arg(long)]
    lemma: Option<LemmaId>,
    #[arg(long)]
    a: Option<IntRange>,
    #[arg(long)]
    b: Option<IntRange>,
    #[arg(long)]
    e: Option<IntRange>,
    #[arg(long)]
    n: Option<IntRange>,
    #[arg(long)]
    i: Option<IntRange>,
    /// Drop the lemma hypotheses from the grid (expect violations).
    #[arg(long)]
    no_hypothesis: bool,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct VerifyArgs {
    /// Range of n, e.g. 3..9 or 7.
    #[arg(long)]
    n: Option<IntRange>,
    /// Largest d_1 to enumerate.
    #[arg(long)]
    max_d1: Option<i64>,
    /// Use reg(D) <= 2 d_1 - 3.
    #[arg(long)]
    strict: bool,
    /// Worker threads (default: all cores).
    #[arg(long)]
    jobs: Option<usize>,
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand)]
enum VerifyCommand {
    /// sum_i pi_i(D) >= 2^n + 2^(n-1).
    Total(VerifyArgs),
    /// pi_i(D) >= 2 binomial(n,i) for 1 <= i <= ceil(n/2).
    Half(VerifyArgs),
    /// pi_i(D) >= binomial(n,i) for every i.
    Erman(VerifyArgs),
    /// The 36 sequences with n in {6,7,8} left over by the per-index bound.
    SpecialCases {
        #[arg(long)]
        json: bool,
    },
}

/// Exit status 1 for a mathematical failure, 2 for bad input.
enum Failure {
    Math(String),
    Input(String),
}

impl From<betti_core::Error> for Failure {
    fn from(e: betti_core::Error) -> Self {
        Failure::Input(e.to_string())
    }
}

type CmdResult = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Pi { degrees, index, json } => cmd_pi(&degrees, index, json),
        Command::Decompose { input, output, codim, check, rows } => {
            cmd_decompose(&input, output.as_ref(), codim, check, rows)
        }
        Command::Bounds { command } => cmd_bounds(command),
        Command::Verify { command } => cmd_verify(command),
        Command::Certify { n, json } => cmd_certify(n as usize, json),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Math(msg)) => {
            eprintln!("{msg}");
            ExitCode::from(1)
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn parse_degrees(text: &str) -> Result<DegreeSequence, Failure> {
    let mut out = Vec::new();
    for (k, part) in text.split(',').enumerate() {
        let part = part.trim();
        let v = part
            .parse::<i64>()
            .map_err(|_| Failure::Input(format!("degree at index {k} ({part:?}) is not an integer")))?;
        out.push(v);
    }
    Ok(DegreeSequence::new(out)?)
}

fn cmd_pi(degrees: &str, index: Option<usize>, json: bool) -> CmdResult {
    let d = parse_degrees(degrees)?;
    if let Some(k) = index {
        let v = pi(&d, k)?;
        if json {
            print!("{}", to_pretty(&json!({ "index": k, "pi": v })));
        } else {
            println!("{v}");
        }
        return Ok(());
    }
    let values = pi_all(&d);
    if json {
        let doc = json!({ "pi": values, "reg": d.regularity(), "sum": sum_pi(&d) });
        print!("{}", to_pretty(&doc));
    } else {
        let line: Vec<String> = values.iter().map(Rat::to_string).collect();
        println!("{}", line.join(" "));
    }
    Ok(())
}

fn cmd_decompose(
    input: &PathBuf,
    output: Option<&PathBuf>,
    codim: Option<usize>,
    check: bool,
    rows: bool,
) -> CmdResult {
    let text = fs::read_to_string(input)
        .map_err(|e| Failure::Input(format!("cannot read {}: {e}", input.display())))?;
    let file = DiagramFile::from_json(&text)?;
    let diagram = file.to_diagram()?;
    if rows {
        eprint!("{}", diagram.render_rows());
    }
    let write = |doc: &DecompositionFile| -> CmdResult {
        let json = doc.to_json();
        match output {
            Some(path) => fs::write(path, json)
                .map_err(|e| Failure::Input(format!("cannot write {}: {e}", path.display()))),
            None => {
                print!("{json}");
                Ok(())
            }
        }
    };
    let dec = match greedy_decompose(&diagram) {
        Ok(dec) => dec,
        Err(err) => {
            write(&DecompositionFile {
                beta0: err.partial.lambda_sum(),
                summands: DecompositionFile::from_decomposition(&err.partial).summands,
            })?;
            return Err(Failure::Math(format!("{err}")));
        }
    };
    write(&DecompositionFile::from_decomposition(&dec))?;
    if let Some(c) = codim.or(file.codim) {
        for w in check_codim(&dec, &diagram, c)? {
            eprintln!("warning: {w}");
        }
    }
    if check {
        let back = recompose(&dec);
        if back != diagram {
            return Err(Failure::Math(format!(
                "recomposition differs from the input:\n{}",
                back.render_rows()
            )));
        }
        eprintln!("round trip: exact");
    }
    Ok(())
}

fn cmd_bounds(command: BoundsCommand) -> CmdResult {
    match command {
        BoundsCommand::Eval { a, b, e, n, i } => {
            let v = bounds::f(a, b, e, n, i)?;
            println!("{v}");
            println!("~ {}", v.to_decimal_string(4));
        }
        BoundsCommand::Sweep { a, b, e, i, n, json } => {
            let mut rows = Vec::new();
            for n in n.lo..=n.hi {
                rows.push((n, bounds::f(a, b, e, n, i)?));
            }
            if json {
                let doc: Vec<_> = rows.iter().map(|(n, v)| json!({ "n": n, "value": v })).collect();
                print!("{}", to_pretty(&doc));
            } else {
                for (n, v) in rows {
                    println!("{n} {v} {}", v.to_decimal_string(4));
                }
            }
        }
        BoundsCommand::Table => return bounds_table(),
        BoundsCommand::Lemmas(args) => return bounds_lemmas(args),
        BoundsCommand::Sharpness => {
            let (at5, at6) = bounds::fn_sharpness();
            println!("F(2,0,2,5,3) = {at5}");
            println!("F(2,0,2,6,3) = {at6}");
            println!("{at5} > {at6}");
        }
    }
    Ok(())
}

fn bounds_table() -> CmdResult {
    let mut bad = Vec::new();
    let mut current = 0;
    for entry in bounds::computation_table() {
        if entry.computation != current {
            current = entry.computation;
            println!("Computation {current}");
        }
        let flag = match entry.display_matches() {
            Some(true) => "OK",
            Some(false) => "MISMATCH",
            None if entry.at_least_two => ">= 2",
            None => "< 2",
        };
        if flag == "MISMATCH" || flag == "< 2" {
            bad.push(entry.label.clone());
        }
        println!("  {} = {} ({}) {flag}", entry.label, entry.value, entry.decimal());
    }
    if bad.is_empty() {
        Ok(())
    } else {
        Err(Failure::Math(format!("table check failed for {}", bad.join(", "))))
    }
}

fn bounds_lemmas(args: LemmaArgs) -> CmdResult {
    let lemmas = match args.lemma {
        Some(l) => vec![l],
        None => LemmaId::ALL.to_vec(),
    };
    let mut reports = Vec::new();
    for lemma in lemmas {
        let mut grid = LemmaGrid::default_for(lemma);
        for (slot, given) in [
            (&mut grid.a, args.a),
            (&mut grid.b, args.b),
            (&mut grid.e, args.e),
            (&mut grid.n, args.n),
            (&mut grid.i, args.i),
        ] {
            if let Some(r) = given {
                *slot = (r.lo, r.hi);
            }
        }
        grid.enforce_hypothesis = !args.no_hypothesis;
        let report = bounds::check_lemma(lemma, &grid);
        if !args.json {
            println!(
                "{}: {} points, {} violations",
                lemma,
                report.checked,
                report.violations.len()
            );
            for v in report.violations.iter().take(5) {
                let params: Vec<String> = v.params.iter().map(|(k, x)| format!("{k}={x}")).collect();
                println!("  {}: {} > {}", params.join(" "), v.lhs, v.rhs);
            }
        }
        reports.push(report);
    }
    if args.json {
        print!("{}", to_pretty(&reports));
    }
    let failed: Vec<String> = reports
        .iter()
        .filter(|r| !r.holds())
        .map(|r| r.lemma_id.to_string())
        .collect();
    if failed.is_empty() {
        Ok(())
    } else {
        Err(Failure::Math(format!("violations in {}", failed.join(", "))))
    }
}

fn with_jobs<T: Send>(jobs: Option<usize>, f: impl FnOnce() -> T + Send) -> Result<T, Failure> {
    match jobs {
        None => Ok(f()),
        Some(0) => Err(Failure::Input("--jobs must be at least 1".into())),
        Some(k) => rayon::ThreadPoolBuilder::new()
            .num_threads(k)
            .build()
            .map(|pool| pool.install(f))
            .map_err(|e| Failure::Input(e.to_string())),
    }
}

fn spec_from(args: &VerifyArgs, default_n: (usize, usize)) -> Result<EnumSpec, Failure> {
    let (lo, hi) = match args.n {
        Some(r) if r.lo < 0 => return Err(Failure::Input("n must be positive".into())),
        Some(r) => (r.lo as usize, r.hi as usize),
        None => default_n,
    };
    let a_max = args.max_d1.unwrap_or_else(|| EnumSpec::default_a_max(hi));
    let mut spec = EnumSpec::new(lo, hi, a_max)?;
    spec.strict = args.strict;
    Ok(spec)
}

fn cmd_verify(command: VerifyCommand) -> CmdResult {
    let (args, report) = match command {
        VerifyCommand::SpecialCases { json } => return special_cases(json),
        VerifyCommand::Total(args) => {
            let spec = spec_from(&args, (3, 9))?;
            let r = with_jobs(args.jobs, || verify::verify_total_bound(&spec))??;
            (args, r)
        }
        VerifyCommand::Half(args) => {
            let spec = spec_from(&args, (6, 11))?;
            let r = with_jobs(args.jobs, || verify::verify_half_double(&spec))??;
            (args, r)
        }
        VerifyCommand::Erman(args) => {
            let spec = spec_from(&args, (3, 9))?;
            let r = with_jobs(args.jobs, || verify::verify_erman_bound(&spec))??;
            (args, r)
        }
    };
    if args.json {
        print!("{}", to_pretty(&report));
    } else {
        print_summary(&report);
    }
    if report.holds() {
        Ok(())
    } else {
        Err(Failure::Math(format!("{} violations", report.violations.len())))
    }
}

fn print_summary(r: &VerifyReport) {
    let s = &r.spec;
    println!(
        "{:?}: n {}..{}, d1 {}..{}, reg <= 2*d1 - {}",
        r.theorem_id,
        s.n_min,
        s.n_max,
        s.a_min,
        s.a_max,
        if s.strict { 3 } else { 2 }
    );
    println!(
        "checked {}, excluded {}, equalities {}, violations {}",
        r.checked,
        r.excluded.len(),
        r.equalities.len(),
        r.violations.len()
    );
    for v in r.violations.iter().take(10) {
        match v.index {
            Some(i) => println!("  {} i={i}: {} < {}", v.degrees, v.lhs, v.rhs),
            None => println!("  {}: {} < {}", v.degrees, v.lhs, v.rhs),
        }
    }
}

fn special_cases(json: bool) -> CmdResult {
    let r = verify::special_cases();
    let satisfied = r.sequences.len() - r.total_bound.violations.len();
    if json {
        print!("{}", to_pretty(&r));
    } else {
        println!("{} sequences, {satisfied} satisfy total bound", r.sequences.len());
        for (n, a, count) in &r.buckets {
            println!("  n={n} d1={a}: {count}");
        }
        println!(
            "  per-index doubled bound fails in {} (sequence, index) pairs",
            r.half_double_failures.len()
        );
    }
    if r.total_bound.holds() {
        Ok(())
    } else {
        Err(Failure::Math(format!("{} violations", r.total_bound.violations.len())))
    }
}

fn cmd_certify(n: usize, json: bool) -> CmdResult {
    let report = polycert::certificate(n)?;
    if json {
        print!("{}", to_pretty(&report));
    } else {
        println!("certificate for n = {n}");
        for s in &report.steps {
            println!("[{}] {}: {}", s.verdict, s.name, s.detail);
        }
        for note in &report.notes {
            println!("note: {note}");
        }
        println!("reduced: {}", report.reduced);
    }
    match report.first_failure() {
        None => Ok(()),
        Some(s) => Err(Failure::Math(format!(
            "certificate {} at step {}",
            if s.verdict == Verdict::Fail { "failed" } else { "inconclusive" },
            s.name
        ))),
    }
}
