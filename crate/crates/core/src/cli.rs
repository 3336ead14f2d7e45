//! Command-line front end. [`run`] parses arguments, does the work and
//! returns the process exit code:
//!
//! | code | meaning |
//! |------|---------|
//! | 0 | success |
//! | 1 | I/O failure |
//! | 2 | usage error |
//! | 3 | parameters outside the family domain |
//! | 4 | consistency check failed |

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::attractor::{
    chaos_game, deterministic_cover_capped, export_pgm, export_svg, rasterize_supersampled, ChaosOptions,
    CoverIndex, MapWeighting, RasterSource, SvgShape, Viewport, RNG_ALGORITHM,
};
use crate::dimension::{dimension_of, scan_1d, scan_2d, scan_minimum, write_csv};
use crate::error::{Error, Result};
use crate::format::sig17;
use crate::geometry::{classify, family_domain, vertex_c, TriangleParams};
use crate::ifs::{build_ifs, scaling_ratios, FamilyTag, IfsRecord, SierpinskiIFS};
use crate::tiling::{algebraic_condition, disjointness_report, make_tiling_capped, solve_fff_algebraic, ThetaStream};
use crate::tolerances;

/// Environment variable naming the default directory for written files.
pub const OUT_DIR_ENV: &str = "SIERPINSKI_OUT_DIR";

pub const EXIT_OK: i32 = 0;
pub const EXIT_IO: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_DOMAIN: i32 = 3;
pub const EXIT_CONSISTENCY: i32 = 4;

#[derive(Debug, Parser)]
#[command(name = "sierpinski", version, about = "Generalised Sierpinski triangles: IFS, dimension, rendering, tilings")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Ratios, vertex C, classification and open-set check.
    Info(Shape),
    /// Render the attractor to PGM or SVG.
    Render(RenderArgs),
    /// Similarity dimension at one parameter pair.
    Dimension(DimensionArgs),
    /// CSV sweep over b.
    Scan(ScanArgs),
    /// CSV sweep over an (a, b) grid.
    Scan2d(Scan2dArgs),
    /// Finite tiling T_{θ,k} as SVG plus a JSON manifest.
    Tile(TileArgs),
    /// Run the invariant suite; nonzero exit on any failure.
    Check(Shape),
}

#[derive(Debug, Args)]
struct Shape {
    #[arg(long)]
    family: FamilyTag,
    /// |BC|
    #[arg(long, allow_negative_numbers = true)]
    a: f64,
    /// |AC|
    #[arg(long, allow_negative_numbers = true)]
    b: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum RenderMode {
    Cover,
    Chaos,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ImageFormat {
    Pgm,
    Svg,
}

#[derive(Debug, Args)]
struct RenderArgs {
    #[command(flatten)]
    shape: Shape,
    #[arg(long, value_enum, default_value = "cover")]
    mode: RenderMode,
    #[arg(long, default_value_t = 8)]
    depth: usize,
    #[arg(long, default_value_t = tolerances::DEPTH_CAP)]
    depth_cap: usize,
    /// Chaos-game points kept after burn-in.
    #[arg(long, default_value_t = 100_000)]
    points: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = tolerances::BURN_IN)]
    burn_in: usize,
    /// Pick maps uniformly instead of by squared ratio.
    #[arg(long)]
    uniform: bool,
    #[arg(long, default_value_t = 512)]
    width: usize,
    #[arg(long, default_value_t = 512)]
    height: usize,
    /// "xmin ymin xmax ymax"; defaults to the hull with a 2% margin.
    #[arg(long)]
    viewport: Option<Viewport>,
    /// Render at 2x and downsample.
    #[arg(long)]
    supersample: bool,
    #[arg(long, value_enum, default_value = "pgm")]
    format: ImageFormat,
    #[arg(long, short)]
    output: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct DimensionArgs {
    #[command(flatten)]
    shape: Shape,
    #[arg(long, default_value_t = tolerances::MORAN)]
    tol: f64,
}

#[derive(Debug, Args)]
struct ScanArgs {
    #[arg(long)]
    family: FamilyTag,
    #[arg(long, allow_negative_numbers = true)]
    b_min: f64,
    #[arg(long, allow_negative_numbers = true)]
    b_max: f64,
    #[arg(long, default_value_t = 201)]
    steps: usize,
    /// Fixed |BC|; defaults to max(b, 1) per sample.
    #[arg(long, allow_negative_numbers = true)]
    a: Option<f64>,
    #[arg(long, default_value_t = tolerances::MORAN)]
    tol: f64,
    /// CSV destination; standard output when absent.
    #[arg(long, short)]
    output: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct Scan2dArgs {
    #[arg(long)]
    family: FamilyTag,
    #[arg(long, allow_negative_numbers = true)]
    a_min: f64,
    #[arg(long, allow_negative_numbers = true)]
    a_max: f64,
    #[arg(long, allow_negative_numbers = true)]
    b_min: f64,
    #[arg(long, allow_negative_numbers = true)]
    b_max: f64,
    #[arg(long, default_value_t = 101)]
    steps: usize,
    #[arg(long, default_value_t = tolerances::MORAN)]
    tol: f64,
    #[arg(long, short)]
    output: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct TileArgs {
    #[arg(long, required_unless_present = "fff_algebraic")]
    family: Option<FamilyTag>,
    #[arg(long, required_unless_present = "fff_algebraic", allow_negative_numbers = true)]
    a: Option<f64>,
    #[arg(long, required_unless_present = "fff_algebraic", allow_negative_numbers = true)]
    b: Option<f64>,
    /// Use the FFF triangle with γ = α^X = β^Y.
    #[arg(long, num_args = 2, value_names = ["X", "Y"], conflicts_with_all = ["family", "a", "b"])]
    fff_algebraic: Option<Vec<u32>>,
    /// Address such as "3(12)": literal prefix, then a repeating period.
    #[arg(long, default_value = "(1)")]
    theta: ThetaStream,
    #[arg(long, default_value_t = 3)]
    k: usize,
    #[arg(long, default_value_t = tolerances::DEPTH_CAP)]
    depth_cap: usize,
    /// Fail with exit 4 if any two tiles overlap.
    #[arg(long)]
    check_disjoint: bool,
    /// Path stem; writes `<stem>.svg` and `<stem>.json`.
    #[arg(long, short)]
    output: Option<PathBuf>,
}

/// Exit code for a library error.
pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::InvalidParams { .. }
        | Error::DegenerateTriangle { .. }
        | Error::FamilyDomainViolation { .. }
        | Error::DomainEdge { .. }
        | Error::InvalidRatio { .. }
        | Error::BracketFailure { .. } => EXIT_DOMAIN,
        Error::ConsistencyFailure { .. } | Error::NoConvergence { .. } | Error::SingularMap { .. } => {
            EXIT_CONSISTENCY
        }
        Error::Io(_) => EXIT_IO,
        _ => EXIT_USAGE,
    }
}

/// Parses `args` (including the program name) and executes the command.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { stderr.write_all(text.as_bytes()) } else { stdout.write_all(text.as_bytes()) };
            return code;
        }
    };
    match execute(cli.command, stdout, stderr) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            exit_code(&e)
        }
    }
}

fn params(shape: &Shape) -> Result<TriangleParams> {
    TriangleParams::new(shape.a, shape.b)
}

fn ifs_for(shape: &Shape) -> Result<SierpinskiIFS> {
    build_ifs(shape.family, params(shape)?)
}

fn default_dir() -> PathBuf {
    std::env::var_os(OUT_DIR_ENV).map(PathBuf::from).unwrap_or_else(|| PathBuf::from("."))
}

fn write_file(path: &Path, bytes: &[u8]) -> Result<()> {
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        std::fs::create_dir_all(dir)?;
    }
    std::fs::write(path, bytes)?;
    Ok(())
}

fn execute(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    match command {
        Command::Info(shape) => info(&shape, out),
        Command::Render(args) => render(&args, out),
        Command::Dimension(args) => {
            let s = dimension_of(args.shape.family, params(&args.shape)?, args.tol)?;
            writeln!(out, "d = {}", sig17(s.d))?;
            writeln!(out, "residual = {}", sig17(s.residual))?;
            Ok(EXIT_OK)
        }
        Command::Scan(args) => {
            let records = scan_1d(args.family, args.b_min, args.b_max, args.steps, args.a, args.tol);
            emit_csv(&records, args.output.as_deref(), out)?;
            if let Some((i, min)) = scan_minimum(&records) {
                writeln!(err, "grid minimum d = {} at b = {} (index {i}; minimum at b = 1 is a conjecture)", sig17(min.d), sig17(min.b))?;
            }
            Ok(EXIT_OK)
        }
        Command::Scan2d(args) => {
            let records = scan_2d(
                args.family,
                (args.a_min, args.a_max),
                (args.b_min, args.b_max),
                (args.steps, args.steps),
                args.tol,
            );
            emit_csv(&records, args.output.as_deref(), out)?;
            Ok(EXIT_OK)
        }
        Command::Tile(args) => tile(&args, out),
        Command::Check(shape) => check(&shape, out),
    }
}

fn emit_csv(records: &[crate::dimension::ScanRecord], path: Option<&Path>, out: &mut dyn Write) -> Result<()> {
    let mut buf = Vec::new();
    write_csv(records, &mut buf)?;
    match path {
        Some(p) => write_file(p, &buf),
        None => Ok(out.write_all(&buf)?),
    }
}

fn info(shape: &Shape, out: &mut dyn Write) -> Result<i32> {
    let p = params(shape)?;
    let class = classify(p, tolerances::CLASSIFY);
    let c = vertex_c(p);
    writeln!(out, "family = {}", shape.family)?;
    writeln!(out, "a = {}", sig17(p.a()))?;
    writeln!(out, "b = {}", sig17(p.b()))?;
    writeln!(out, "C = ({}, {})", sig17(c.x), sig17(c.y))?;
    writeln!(out, "triangle = {}{}", class.kind, if class.degenerate { " (degenerate)" } else { "" })?;
    family_domain(shape.family, p)?;
    let ratios = scaling_ratios(shape.family, p)?;
    writeln!(out, "ratios = {} {} {}", sig17(ratios[0]), sig17(ratios[1]), sig17(ratios[2]))?;
    let ifs = build_ifs(shape.family, p)?;
    let osc = ifs.osc_witness();
    writeln!(
        out,
        "osc = {} (containment failures {}, max pair overlap {})",
        if osc.passed { "pass" } else { "fail" },
        osc.containment_failures.len(),
        sig17(osc.max_overlap())
    )?;
    let d = dimension_of(shape.family, p, tolerances::MORAN)?;
    writeln!(out, "dimension = {}", sig17(d.d))?;
    out.write_all(ifs.to_text().as_bytes())?;
    Ok(EXIT_OK)
}

fn render(args: &RenderArgs, out: &mut dyn Write) -> Result<i32> {
    let ifs = ifs_for(&args.shape)?;
    let hull = ifs.vertices();
    let viewport = match args.viewport {
        Some(v) => v,
        None => Viewport::around(hull, 0.02)?,
    };
    let ext = match args.format {
        ImageFormat::Pgm => "pgm",
        ImageFormat::Svg => "svg",
    };
    let path = args.output.clone().unwrap_or_else(|| {
        default_dir().join(format!("{}-{}-{}.{ext}", args.shape.family, args.shape.a, args.shape.b))
    });

    let bytes = match (args.mode, args.format) {
        (RenderMode::Cover, ImageFormat::Svg) => {
            let cover = deterministic_cover_capped(&ifs, args.depth, args.depth_cap)?;
            let shapes: Vec<SvgShape> = cover.triangles().iter().map(|&outline| SvgShape { outline, class: 0 }).collect();
            export_svg(&shapes).into_bytes()
        }
        (RenderMode::Chaos, ImageFormat::Svg) => {
            return Err(Error::Unsupported("chaos-game output is raster only; use --format pgm".into()))
        }
        (mode, ImageFormat::Pgm) => {
            let factor = if args.supersample { 2 } else { 1 };
            let bitmap = match mode {
                RenderMode::Cover => {
                    let cover = deterministic_cover_capped(&ifs, args.depth, args.depth_cap)?;
                    rasterize_supersampled(RasterSource::Cover(&cover), viewport, args.width, args.height, factor)?
                }
                RenderMode::Chaos => {
                    let weighting = if args.uniform { MapWeighting::Uniform } else { MapWeighting::Area };
                    let opts = ChaosOptions { n: args.points, seed: args.seed, burn_in: args.burn_in, weighting };
                    let cloud = chaos_game(&ifs, &opts);
                    rasterize_supersampled(RasterSource::Points(&cloud), viewport, args.width, args.height, factor)?
                }
            };
            export_pgm(&bitmap)
        }
    };
    write_file(&path, &bytes)?;

    let osc = ifs.osc_witness();
    let meta = serde_json::json!({
        "family": ifs.family().as_str(),
        "a": ifs.params().a(),
        "b": ifs.params().b(),
        "mode": format!("{:?}", args.mode).to_lowercase(),
        "depth": args.depth,
        "points": args.points,
        "seed": args.seed,
        "burn_in": args.burn_in,
        "rng": RNG_ALGORITHM,
        "viewport": viewport,
        "width": args.width,
        "height": args.height,
        "osc": osc,
    });
    let meta_path = path.with_extension(format!("{ext}.json"));
    write_file(&meta_path, serde_json::to_string_pretty(&meta).map_err(|e| Error::Io(e.to_string()))?.as_bytes())?;
    writeln!(out, "wrote {}", path.display())?;
    writeln!(out, "wrote {}", meta_path.display())?;
    if !osc.passed {
        writeln!(out, "note: level-1 open-set check failed; see {}", meta_path.display())?;
    }
    Ok(EXIT_OK)
}

fn tile(args: &TileArgs, out: &mut dyn Write) -> Result<i32> {
    let (family, p) = match &args.fff_algebraic {
        Some(xy) => (FamilyTag::Fff, solve_fff_algebraic(xy[0], xy[1])?),
        None => {
            let (Some(family), Some(a), Some(b)) = (args.family, args.a, args.b) else {
                return Err(Error::InvalidParams { a: f64::NAN, b: f64::NAN, reason: "--family, --a and --b are required".into() });
            };
            (family, TriangleParams::new(a, b)?)
        }
    };
    let ifs = build_ifs(family, p)?;
    let tiling = make_tiling_capped(&ifs, &args.theta, args.k, args.depth_cap)?;
    let prototiles = algebraic_condition(ifs.ratios(), tolerances::ALGEBRAIC);
    let stem = args.output.clone().unwrap_or_else(|| default_dir().join(format!("tiling-{family}-k{}", args.k)));
    let svg_path = stem.with_extension("svg");
    let json_path = stem.with_extension("json");
    write_file(&svg_path, tiling.to_svg().as_bytes())?;
    let manifest = tiling.manifest(&ifs, prototiles.as_ref());
    write_file(&json_path, serde_json::to_string_pretty(&manifest).map_err(|e| Error::Io(e.to_string()))?.as_bytes())?;
    writeln!(out, "wrote {}", svg_path.display())?;
    writeln!(out, "wrote {}", json_path.display())?;
    writeln!(out, "tiles = {}", tiling.len())?;
    writeln!(out, "scale classes = {}", tiling.scale_classes().len())?;
    match &prototiles {
        Some(set) => writeln!(out, "prototiles: s = {} exponents = {:?} classes = {}", sig17(set.s), set.exponents, set.classes.len())?,
        None => writeln!(out, "prototiles: algebraic condition not satisfied")?,
    }
    if args.check_disjoint {
        let report = disjointness_report(&tiling);
        writeln!(out, "max relative overlap = {}", sig17(report.max_relative_overlap))?;
        if !report.passed {
            return Err(Error::ConsistencyFailure {
                identity: format!("tiles {:?} are disjoint", report.worst_pair),
                residual: report.max_relative_overlap,
            });
        }
    }
    Ok(EXIT_OK)
}

/// Runs each named check and prints `PASS name` or `FAIL name: reason`.
fn check(shape: &Shape, out: &mut dyn Write) -> Result<i32> {
    let p = params(shape)?;
    family_domain(shape.family, p)?;
    let ifs = build_ifs(shape.family, p)?;
    let mut failures = 0;
    let mut report = |name: &str, result: Result<()>, out: &mut dyn Write| -> Result<()> {
        match result {
            Ok(()) => writeln!(out, "PASS {name}")?,
            Err(e) => {
                failures += 1;
                writeln!(out, "FAIL {name}: {e}")?
            }
        }
        Ok(())
    };

    report("map invariants", ifs.check_invariants(), out)?;
    let osc = ifs.osc_witness();
    let osc_result = if osc.passed {
        Ok(())
    } else {
        Err(Error::ConsistencyFailure { identity: "level-1 open set condition".into(), residual: osc.max_overlap() })
    };
    report("open set (level 1)", osc_result, out)?;
    report(
        "serialization round trip",
        IfsRecord::parse(&ifs.to_text()).and_then(|r| r.rebuild(tolerances::TRANSFORM)).map(|_| ()),
        out,
    )?;
    report("moran residual", dimension_of(shape.family, p, tolerances::MORAN).map(|_| ()), out)?;
    report("cover nesting", check_cover(&ifs), out)?;
    report("chaos game soundness", check_chaos(&ifs), out)?;
    report("tiling nesting and disjointness", check_tiling(&ifs), out)?;
    Ok(if failures == 0 { EXIT_OK } else { EXIT_CONSISTENCY })
}

fn check_cover(ifs: &SierpinskiIFS) -> Result<()> {
    let parent = deterministic_cover_capped(ifs, 3, 4)?;
    let child = deterministic_cover_capped(ifs, 4, 4)?;
    for (i, t) in child.triangles().iter().enumerate() {
        let host = &parent.triangles()[i / 3];
        let residual = t.iter().map(|&v| crate::polygon::distance_to_triangle(host, v)).fold(0.0, f64::max);
        if residual > tolerances::TRANSFORM {
            return Err(Error::ConsistencyFailure { identity: format!("cover triangle {i} inside its parent"), residual });
        }
    }
    Ok(())
}

fn check_chaos(ifs: &SierpinskiIFS) -> Result<()> {
    let cover = deterministic_cover_capped(ifs, 10, 10)?;
    let index = CoverIndex::new(&cover, 1e-9);
    let cloud = chaos_game(ifs, &ChaosOptions::new(2_000, 1));
    let outside = cloud.points.iter().filter(|&&p| !index.contains(p)).count();
    if outside > 0 {
        return Err(Error::ConsistencyFailure {
            identity: "chaos-game points lie on the depth-10 cover".into(),
            residual: outside as f64,
        });
    }
    Ok(())
}

fn check_tiling(ifs: &SierpinskiIFS) -> Result<()> {
    let theta: ThetaStream = "3(12)".parse()?;
    let mut previous = make_tiling_capped(ifs, &theta, 0, 4)?;
    for k in 1..=3 {
        let next = make_tiling_capped(ifs, &theta, k, 4)?;
        next.check_tiles(ifs)?;
        let letter = theta.prefix(k)?.letters()[k - 1];
        for (i, tile) in previous.tiles.iter().enumerate() {
            // prepending a letter to a length-(k−1) word shifts its index
            let j = (letter as usize - 1) * 3usize.pow(k as u32 - 1) + i;
            let residual = next.tiles[j].transform.max_abs_diff(&tile.transform);
            if residual > tolerances::TRANSFORM {
                return Err(Error::ConsistencyFailure { identity: format!("tile {} nests at k={k}", tile.word), residual });
            }
        }
        let d = disjointness_report(&next);
        if !d.passed {
            return Err(Error::ConsistencyFailure {
                identity: format!("tiles disjoint at k={k}"),
                residual: d.max_relative_overlap,
            });
        }
        previous = next;
    }
    Ok(())
}
