//! Command-line front end: generate class listings, run the census, reduce
//! maps to their unique ancestors, apply single surgery steps, and convert
//! between the supported formats.

use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use quadforge::canon::canonical_code;
use quadforge::equilibrium::{
    census, primary_coverage_from, secondary_classes, singleton_seeds, PrimaryClass, QuasiDual,
};
use quadforge::genesis::{ancestor, closure, generate_levels};
use quadforge::io::{read_mq, read_mq_any, write_dot, write_mq, write_planar_code};
use quadforge::map::{c4, p2, pseudo_double_wheel, q3, q4, radial};
use quadforge::surgery::{
    contract, contraction_degree, contraction_sites, degree_of_split, enumerate_splits, split,
};
use quadforge::EmbeddedMap;

#[derive(Parser)]
#[command(name = "quadforge", version, about = "Spherical multiquadrangulation toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List every class with a given vertex count, sorted by canonical code
    Gen(GenArgs),
    /// Count classes level by level and print the summary tables
    Census(CensusArgs),
    /// Reduce a map to its unique irreducible ancestor
    Ancestor(FileArgs),
    /// Apply one vertex split, chosen by index among the eligible walks
    Split(SplitArgs),
    /// Apply one face contraction, chosen by index among the valid sites
    Contract(ContractArgs),
    /// Build the vertex-face incidence map of an embedded graph
    Radial(FileArgs),
    /// Emit a pseudo-double wheel (cycle of 2k vertices plus two hubs)
    Pdw(PdwArgs),
    /// List coloured classes with a given point count
    Classes(ClassesArgs),
    /// Report which (stable, unstable) pairs restricted growth reaches
    Coverage(CoverageArgs),
    /// Check census results against the frozen reference counts
    Verify(VerifyArgs),
    /// Re-emit a map file in another format
    Convert(ConvertArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MapFormat {
    Mq,
    Dot,
    #[value(name = "planar_code")]
    PlanarCode,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CensusFormat {
    Text,
    Csv,
}

#[derive(Args)]
struct GenArgs {
    /// Number of vertices
    #[arg(short = 'n', long = "vertices")]
    vertices: usize,
    /// Allowed split degrees as "lo,hi"
    #[arg(long, default_value = "1,3")]
    restrict: String,
    /// Comma-separated starting classes: p2|c4|q3|q4|pdw:K|file:PATH
    #[arg(long, default_value = "p2")]
    seeds: String,
    #[arg(long, value_enum, default_value_t = MapFormat::Mq)]
    format: MapFormat,
    /// Worker threads (QUADFORGE_WORKERS overrides; output never depends on it)
    #[arg(long)]
    workers: Option<usize>,
    /// Output file; stdout when absent
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct CensusArgs {
    /// Largest vertex count to include
    #[arg(short = 'N', long = "max-vertices")]
    max_vertices: usize,
    #[arg(long, value_enum, default_value_t = CensusFormat::Text)]
    format: CensusFormat,
    #[arg(long)]
    workers: Option<usize>,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct FileArgs {
    /// Input map file ("-" for stdin)
    file: PathBuf,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct SplitArgs {
    /// Input map file ("-" for stdin)
    file: PathBuf,
    /// Which eligible walk to apply (walks are ordered by vertex, then fan)
    #[arg(long, default_value_t = 0)]
    index: usize,
    /// Allowed split degrees as "lo,hi"
    #[arg(long, default_value = "1,3")]
    restrict: String,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct ContractArgs {
    /// Input map file ("-" for stdin)
    file: PathBuf,
    /// Which valid contraction site to apply (face order, then axis)
    #[arg(long, default_value_t = 0)]
    index: usize,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct PdwArgs {
    /// Half the rim length; the rim has 2k vertices
    #[arg(short = 'k', long = "hub-degree")]
    k: usize,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct ClassesArgs {
    /// Total number of stable and unstable points
    #[arg(short = 'n', long = "points")]
    points: usize,
    /// Keep only classes with these counts, as "s,u"
    #[arg(long)]
    primary: Option<String>,
    #[arg(long)]
    workers: Option<usize>,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct CoverageArgs {
    /// Split degree the growth is restricted to
    #[arg(long)]
    degree: usize,
    /// Largest point total to chase
    #[arg(long)]
    max_total: usize,
    /// Drop the seed with these counts, as "s,u" (to probe necessity)
    #[arg(long)]
    drop: Option<String>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Largest vertex count to verify (reference counts reach 10)
    #[arg(short = 'N', long = "max-vertices")]
    max_vertices: usize,
    #[arg(long)]
    workers: Option<usize>,
}

#[derive(Args)]
struct ConvertArgs {
    /// Input map file ("-" for stdin)
    file: PathBuf,
    #[arg(long, value_enum)]
    format: MapFormat,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

fn main() {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => std::process::exit(code),
        Err(err) => {
            eprintln!("error: {err:#}");
            std::process::exit(1);
        }
    }
}

fn run(command: Command) -> Result<i32> {
    match command {
        Command::Gen(args) => cmd_gen(args),
        Command::Census(args) => cmd_census(args),
        Command::Ancestor(args) => cmd_ancestor(args),
        Command::Split(args) => cmd_split(args),
        Command::Contract(args) => cmd_contract(args),
        Command::Radial(args) => cmd_radial(args),
        Command::Pdw(args) => cmd_pdw(args),
        Command::Classes(args) => cmd_classes(args),
        Command::Coverage(args) => cmd_coverage(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Convert(args) => cmd_convert(args),
    }
}

/// Worker count precedence: QUADFORGE_WORKERS, then the flag, then the
/// machine. The count only affects speed — every command's output is
/// identical for every worker count.
fn worker_count(flag: Option<usize>) -> Result<usize> {
    if let Ok(value) = std::env::var("QUADFORGE_WORKERS") {
        let parsed: usize = value
            .trim()
            .parse()
            .ok()
            .filter(|&w| w >= 1)
            .ok_or_else(|| anyhow!("QUADFORGE_WORKERS must be a positive integer, got '{value}'"))?;
        return Ok(parsed);
    }
    if let Some(workers) = flag {
        if workers < 1 {
            bail!("--workers must be at least 1");
        }
        return Ok(workers);
    }
    Ok(std::thread::available_parallelism().map_or(1, |p| p.get()))
}

fn parse_pair(text: &str, what: &str) -> Result<(usize, usize)> {
    let (a, b) = text
        .split_once(',')
        .ok_or_else(|| anyhow!("{what} must look like 'a,b', got '{text}'"))?;
    Ok((
        a.trim().parse().with_context(|| format!("bad {what} '{text}'"))?,
        b.trim().parse().with_context(|| format!("bad {what} '{text}'"))?,
    ))
}

fn parse_restrict(text: &str) -> Result<(usize, usize)> {
    let (lo, hi) = parse_pair(text, "--restrict")?;
    if lo < 1 || hi < lo {
        bail!("--restrict needs 1 <= lo <= hi, got {lo},{hi}");
    }
    Ok((lo, hi))
}

fn parse_seed(token: &str) -> Result<EmbeddedMap> {
    match token {
        "p2" => Ok(p2()),
        "c4" => Ok(c4()),
        "q3" => Ok(q3()),
        "q4" => Ok(q4()),
        _ => {
            if let Some(k) = token.strip_prefix("pdw:") {
                let k: usize = k.parse().with_context(|| format!("bad seed '{token}'"))?;
                Ok(pseudo_double_wheel(k)?)
            } else if let Some(path) = token.strip_prefix("file:") {
                let text = read_input(Path::new(path))?;
                Ok(read_mq(&text)
                    .with_context(|| format!("parsing seed file {path}"))?
                    .0)
            } else {
                bail!("unknown seed '{token}' (expected p2|c4|q3|q4|pdw:K|file:PATH)")
            }
        }
    }
}

fn read_input(path: &Path) -> Result<String> {
    if path == Path::new("-") {
        let mut text = String::new();
        io::stdin().read_to_string(&mut text).context("reading stdin")?;
        Ok(text)
    } else {
        fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
    }
}

fn emit(output: Option<&PathBuf>, bytes: &[u8]) -> Result<()> {
    match output {
        Some(path) => {
            fs::write(path, bytes).with_context(|| format!("writing {}", path.display()))
        }
        None => io::stdout().write_all(bytes).context("writing stdout"),
    }
}

fn render_maps(maps: &[EmbeddedMap], format: MapFormat) -> Result<Vec<u8>> {
    match format {
        MapFormat::Mq => {
            let records: Vec<String> = maps.iter().map(|map| write_mq(map, None)).collect();
            Ok(records.join("\n").into_bytes())
        }
        MapFormat::Dot => {
            let graphs: Vec<String> = maps.iter().map(|map| write_dot(map, None)).collect();
            Ok(graphs.join("\n").into_bytes())
        }
        MapFormat::PlanarCode => {
            write_planar_code(maps).context("planar_code requires simple maps")
        }
    }
}

fn cmd_gen(args: GenArgs) -> Result<i32> {
    if args.vertices < 3 {
        bail!("the smallest quadrangulation has 3 vertices");
    }
    let (lo, hi) = parse_restrict(&args.restrict)?;
    let seeds: Vec<EmbeddedMap> = args
        .seeds
        .split(',')
        .map(parse_seed)
        .collect::<Result<_>>()?;
    let workers = worker_count(args.workers)?;
    // The default request (everything from the smallest map) takes the
    // parallel generator; anything restricted goes through the closure.
    // Both store canonical representatives keyed by code, so the listing
    // is identical where they overlap.
    let p2_only = seeds.len() == 1 && canonical_code(&seeds[0]) == canonical_code(&p2());
    let maps: Vec<EmbeddedMap> = if p2_only && (lo, hi) == (1, 3) {
        generate_levels(args.vertices, workers)
            .pop()
            .expect("at least one level")
            .classes
            .into_values()
            .collect()
    } else {
        closure(&seeds, lo, hi, args.vertices)
            .remove(&args.vertices)
            .map(|classes| classes.into_values().collect())
            .unwrap_or_default()
    };
    emit(args.output.as_ref(), &render_maps(&maps, args.format)?)?;
    Ok(0)
}

fn cmd_census(args: CensusArgs) -> Result<i32> {
    let workers = worker_count(args.workers)?;
    let report = census(args.max_vertices, workers)?;
    let text = match args.format {
        CensusFormat::Text => report.render_text(),
        CensusFormat::Csv => format!(
            "{}\n{}\n{}",
            report.primary_csv(),
            report.counts_csv(),
            report.reducibility_csv()
        ),
    };
    emit(args.output.as_ref(), text.as_bytes())?;
    Ok(0)
}

fn cmd_ancestor(args: FileArgs) -> Result<i32> {
    let (map, _) = read_mq(&read_input(&args.file)?)?;
    let (root, path) = ancestor(&map);
    let mut out = String::new();
    out.push_str(&format!("# ancestor after {} contraction(s)\n", path.len()));
    for site in &path {
        out.push_str(&format!("# contract {} {}\n", site.face_dart, site.axis));
    }
    out.push_str(&write_mq(&root, None));
    emit(args.output.as_ref(), out.as_bytes())?;
    Ok(0)
}

fn cmd_split(args: SplitArgs) -> Result<i32> {
    let (lo, hi) = parse_restrict(&args.restrict)?;
    let (map, _) = read_mq(&read_input(&args.file)?)?;
    let walks = enumerate_splits(&map, lo, hi);
    let walk = walks.get(args.index).ok_or_else(|| {
        anyhow!(
            "--index {} out of range: {} eligible walks of degree {lo}..{hi}",
            args.index,
            walks.len()
        )
    })?;
    let child = split(&map, walk)?;
    let out = format!(
        "# split vertex {} fan {}..{} degree {}\n{}",
        walk.vertex,
        walk.d_first,
        walk.d_last,
        degree_of_split(&map, walk)?,
        write_mq(&child, None)
    );
    emit(args.output.as_ref(), out.as_bytes())?;
    Ok(0)
}

fn cmd_contract(args: ContractArgs) -> Result<i32> {
    let (map, _) = read_mq(&read_input(&args.file)?)?;
    let sites: Vec<_> = contraction_sites(&map)
        .into_iter()
        .filter(|site| contract(&map, site).is_ok())
        .collect();
    let site = sites.get(args.index).ok_or_else(|| {
        anyhow!(
            "--index {} out of range: {} valid contraction sites",
            args.index,
            sites.len()
        )
    })?;
    let parent = contract(&map, site)?;
    let out = format!(
        "# contract face dart {} axis {} degree {}\n{}",
        site.face_dart,
        site.axis,
        contraction_degree(&map, site)?,
        write_mq(&parent, None)
    );
    emit(args.output.as_ref(), out.as_bytes())?;
    Ok(0)
}

fn cmd_radial(args: FileArgs) -> Result<i32> {
    let (map, _) = read_mq_any(&read_input(&args.file)?)?;
    let (radial_map, colouring) = radial(&map)?;
    let out = format!(
        "# radial of {} vertices and {} faces\n{}",
        map.vertex_count(),
        map.face_count(),
        write_mq(&radial_map, Some(&colouring))
    );
    emit(args.output.as_ref(), out.as_bytes())?;
    Ok(0)
}

fn cmd_pdw(args: PdwArgs) -> Result<i32> {
    let map = pseudo_double_wheel(args.k)?;
    emit(args.output.as_ref(), write_mq(&map, None).as_bytes())?;
    Ok(0)
}

fn cmd_classes(args: ClassesArgs) -> Result<i32> {
    if args.points < 2 {
        bail!("the smallest arrangement has 2 points");
    }
    let wanted = match &args.primary {
        Some(text) => {
            let (s, u) = parse_pair(text, "--primary")?;
            Some(PrimaryClass { s, u })
        }
        None => None,
    };
    let workers = worker_count(args.workers)?;
    let mut records = Vec::new();
    for class in secondary_classes(args.points, workers) {
        if wanted.is_some_and(|p| p != class.primary) {
            continue;
        }
        match &class.rep {
            QuasiDual::P1 => records.push(
                "# (1,1) degenerate two-point arrangement: no map representative\n".to_string(),
            ),
            QuasiDual::Map(map, chi) => records.push(write_mq(map, Some(chi))),
        }
    }
    emit(args.output.as_ref(), records.join("\n").as_bytes())?;
    Ok(0)
}

fn cmd_coverage(args: CoverageArgs) -> Result<i32> {
    if args.degree < 1 {
        bail!("--degree must be at least 1");
    }
    if args.max_total < 2 {
        bail!("--max-total must be at least 2");
    }
    let dropped = match &args.drop {
        Some(text) => {
            let (s, u) = parse_pair(text, "--drop")?;
            Some(PrimaryClass { s, u })
        }
        None => None,
    };
    let seeds: Vec<_> = singleton_seeds()
        .into_iter()
        .filter(|seed| dropped != Some(seed.primary))
        .collect();
    let covered = primary_coverage_from(&seeds, args.degree, args.max_total);
    let mut out = String::from("s,u,reached\n");
    let mut missing = 0;
    for total in 2..=args.max_total {
        for s in 1..total {
            let class = PrimaryClass { s, u: total - s };
            let hit = covered.contains(&class);
            if !hit {
                missing += 1;
            }
            out.push_str(&format!(
                "{},{},{}\n",
                class.s,
                class.u,
                if hit { "yes" } else { "MISSING" }
            ));
        }
    }
    out.push_str(&format!("# missing: {missing}\n"));
    emit(None, out.as_bytes())?;
    Ok(if missing > 0 { 1 } else { 0 })
}

/// Reference counts for n = 3..=10: map classes, self-dual coloured
/// classes, all coloured classes.
const EXPECTED_Q: [usize; 8] = [1, 3, 7, 30, 124, 733, 4586, 33373];
const EXPECTED_SELF_DUAL: [usize; 8] = [0, 2, 0, 8, 0, 50, 0, 380];
const EXPECTED_COLOURED: [usize; 8] = [2, 4, 14, 52, 248, 1416, 9172, 66366];

/// Reducibility partition rows for n = 4..=10.
const EXPECTED_REDUCIBILITY: [(usize, usize, usize, usize, usize); 7] = [
    (4, 0, 3, 1, 0),
    (5, 6, 6, 2, 0),
    (6, 32, 16, 4, 0),
    (7, 172, 66, 10, 0),
    (8, 1071, 311, 33, 1),
    (9, 7370, 1688, 114, 0),
    (10, 55766, 10125, 474, 1),
];

fn cmd_verify(args: VerifyArgs) -> Result<i32> {
    if !(3..=10).contains(&args.max_vertices) {
        bail!("reference counts cover 3..=10 vertices");
    }
    let workers = worker_count(args.workers)?;
    let report = census(args.max_vertices, workers)?;
    let mut failures = 0;
    let mut check = |name: String, ok: bool| {
        println!("{} {name}", if ok { "ok  " } else { "FAIL" });
        if !ok {
            failures += 1;
        }
    };

    for (i, row) in report.counts.iter().enumerate() {
        check(
            format!("map classes        n={}: {}", row.n, row.q),
            row.q == EXPECTED_Q[i],
        );
        check(
            format!("self-dual classes  n={}: {}", row.n, row.e_self_dual),
            row.e_self_dual == EXPECTED_SELF_DUAL[i],
        );
        check(
            format!("coloured classes   n={}: {}", row.n, row.e_total),
            row.e_total == EXPECTED_COLOURED[i],
        );
        check(
            format!("identity 2q-sd=e   n={}", row.n),
            2 * row.q - row.e_self_dual == row.e_total,
        );
    }
    for row in &report.reducibility {
        let expected = EXPECTED_REDUCIBILITY[row.n - 4];
        check(
            format!(
                "reducibility       n={}: {},{},{},{}",
                row.n, row.contractible_both, row.no_degree_two, row.no_degree_one, row.irreducible
            ),
            (
                row.n,
                row.contractible_both,
                row.no_degree_two,
                row.no_degree_one,
                row.irreducible,
            ) == expected,
        );
    }
    let primary_total: usize = report.primary.values().sum();
    let coloured_total: usize = 1 + report.counts.iter().map(|r| r.e_total).sum::<usize>();
    check(
        format!("coloured breakdown sums to {coloured_total}"),
        primary_total == coloured_total,
    );

    if failures == 0 {
        println!("all checks passed up to n={}", args.max_vertices);
        Ok(0)
    } else {
        println!("{failures} check(s) failed");
        Ok(2)
    }
}

fn cmd_convert(args: ConvertArgs) -> Result<i32> {
    let (map, colouring) = read_mq_any(&read_input(&args.file)?)?;
    let bytes = match args.format {
        MapFormat::Mq => write_mq(&map, colouring.as_ref()).into_bytes(),
        MapFormat::Dot => write_dot(&map, colouring.as_ref()).into_bytes(),
        MapFormat::PlanarCode => write_planar_code(std::slice::from_ref(&map))
            .context("planar_code requires simple maps")?,
    };
    emit(args.output.as_ref(), &bytes)?;
    Ok(0)
}
