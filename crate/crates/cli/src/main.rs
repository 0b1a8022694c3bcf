use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};

use conedisc::construct::{branched_cover, counterexample_pair, corner_distance, BranchSelector, Cover, CoverSpec, PatchShape};
use conedisc::develop::{cut_along_shortest_path, develop, locate_singularity, CutDisc, Development, Localization};
use conedisc::enumerate::{enumerate_fillings, theorem_words, uniqueness_sweep, verify_uniqueness, UniquenessReport};
use conedisc::format::{parse_tri, to_tri};
use conedisc::iso::{is_isomorphic, IsoMode};
use conedisc::mesh::{CombinatorialDisc, TypeClassification};
use conedisc::metric::{check_gauss_bonnet, cone_table, divisor, irregular_valence_from_boundary, weighted_euler};
use conedisc::svg::render_development;

#[derive(Parser)]
#[command(name = "conedisc", version, about = "Disc triangulations with one irregular vertex")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check that a file describes a triangulated disc and report its type.
    Validate { file: PathBuf },
    /// Cone angles, divisor and Gauss–Bonnet residual.
    Analyze { file: PathBuf },
    /// Cut at the irregular vertex and unfold onto the Eisenstein lattice.
    Develop {
        file: PathBuf,
        /// Also write an SVG picture of the development.
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Build a branched cover of a lattice patch.
    BuildCover {
        /// Patch, e.g. `rhombus:4` or `parallelogram:2x4`.
        #[arg(long)]
        base: PatchShape,
        /// Branch at this base vertex.
        #[arg(long, conflicts_with = "distance", required_unless_present = "distance")]
        vertex: Option<usize>,
        /// Branch at the first interior vertex this far from a corner.
        #[arg(long)]
        distance: Option<usize>,
        #[arg(short, long, default_value_t = 2)]
        k: usize,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Build two covers of one patch that share a boundary but differ in
    /// where the branch vertex sits.
    BuildPair {
        #[arg(long)]
        base: PatchShape,
        /// Corner distances of the two branch vertices, e.g. `2,3`.
        #[arg(long, value_delimiter = ',', required = true)]
        distances: Vec<usize>,
        #[arg(short, long, default_value_t = 2)]
        k: usize,
        /// Directory receiving `cover-d<d>.tri` for each distance.
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Decide whether two discs are isomorphic (exit 1 if not).
    Isocheck {
        first: PathBuf,
        second: PathBuf,
        #[arg(long, default_value = "rotate-start")]
        mode: IsoMode,
        /// Print the vertex map.
        #[arg(long)]
        witness: bool,
    },
    /// All fillings of a boundary word.
    Enumerate {
        #[command(flatten)]
        request: Request,
        /// Directory receiving `filling-<i>.tri`.
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Add a wall-time column (output no longer reproducible).
        #[arg(long)]
        timing: bool,
    },
    /// Count fillings and flag any word with two of them (exit 1 if so).
    VerifyUniqueness {
        #[command(flatten)]
        request: Request,
        /// Instead of one word, check every word of length 3..=max-len over
        /// the alphabet whose forced valence is not a multiple of 6.
        #[arg(long, conflicts_with = "word")]
        sweep: bool,
        #[arg(long, default_value_t = 9)]
        max_len: usize,
        #[arg(long, value_delimiter = ',', default_value = "2,3,4,5")]
        alphabet: Vec<usize>,
        /// Only print summary counts for a sweep.
        #[arg(long)]
        quiet: bool,
        #[arg(long)]
        timing: bool,
    },
    /// SVG picture of a development.
    Render {
        file: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
    },
}

#[derive(Args)]
struct Request {
    /// Boundary word, e.g. `3,3,3,3,3`.
    #[arg(long, value_delimiter = ',')]
    word: Vec<usize>,
    /// Irregular valence; defaults to the one the word forces.
    #[arg(short, long)]
    n: Option<usize>,
    /// Maximum number of triangles.
    #[arg(long, default_value_t = 30)]
    cap: usize,
}

impl Request {
    fn valence(&self) -> Result<Option<usize>> {
        if self.word.is_empty() {
            bail!("--word is required");
        }
        match self.n {
            Some(n) => Ok(Some(n)),
            None => {
                let forced = irregular_valence_from_boundary(&self.word)
                    .with_context(|| format!("word {}", join(&self.word)))?;
                Ok((forced != 6).then_some(forced as usize))
            }
        }
    }
}

/// Negative answers exit with 1, errors with 2.
enum Outcome {
    Yes,
    No,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(Outcome::Yes) => ExitCode::SUCCESS,
        Ok(Outcome::No) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn join(xs: &[usize]) -> String {
    xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

fn load(path: &Path) -> Result<CombinatorialDisc> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse_tri(&text).with_context(|| format!("{}", path.display()))
}

fn write(path: &Path, contents: &str) -> Result<()> {
    fs::write(path, contents).with_context(|| format!("writing {}", path.display()))
}

fn type_label(t: &TypeClassification) -> String {
    match t {
        TypeClassification::Regular => "regular".into(),
        TypeClassification::Irregular { valence, .. } => format!("(6,{valence})"),
    }
}

fn n_label(n: Option<usize>) -> String {
    n.map_or_else(|| "regular".into(), |n| n.to_string())
}

fn run(command: Command) -> Result<Outcome> {
    match command {
        Command::Validate { file } => {
            let d = load(&file)?;
            let t = d.classify_type()?;
            println!(
                "disc: V={} E={} F={}, type {}",
                d.num_vertices(),
                d.num_edges(),
                d.num_faces(),
                type_label(&t)
            );
            Ok(Outcome::Yes)
        }
        Command::Analyze { file } => {
            let d = load(&file)?;
            print!("{}", analyze(&d)?);
            Ok(Outcome::Yes)
        }
        Command::Develop { file, svg } => {
            let d = load(&file)?;
            let (cut, n) = cut_for(&d)?;
            let dev = develop(&cut)?;
            print!("{}", describe_development(&cut, &dev, n)?);
            if let Some(path) = svg {
                write(&path, &render_development(&dev))?;
            }
            Ok(Outcome::Yes)
        }
        Command::BuildCover { base, vertex, distance, k, output } => {
            let branch = match (vertex, distance) {
                (Some(v), _) => BranchSelector::Vertex(v),
                (None, Some(d)) => BranchSelector::CornerDistance(d),
                (None, None) => bail!("give --vertex or --distance"),
            };
            let cover = branched_cover(&CoverSpec { base, branch, sheets: k })?;
            write(&output, &to_tri(&cover.disc))?;
            println!("{}", cover_summary(&cover));
            Ok(Outcome::Yes)
        }
        Command::BuildPair { base, distances, k, output } => {
            if distances.len() != 2 {
                bail!("--distances takes exactly two values");
            }
            let (a, b) = counterexample_pair(base, distances[0], distances[1], k)?;
            fs::create_dir_all(&output).with_context(|| format!("creating {}", output.display()))?;
            for (cover, d) in [(&a, distances[0]), (&b, distances[1])] {
                write(&output.join(format!("cover-d{d}.tri")), &to_tri(&cover.disc))?;
                println!("{}", cover_summary(cover));
            }
            Ok(Outcome::Yes)
        }
        Command::Isocheck { first, second, mode, witness } => {
            let a = load(&first)?;
            let b = load(&second)?;
            match is_isomorphic(&a, &b, mode) {
                Some(iso) => {
                    println!("isomorphic ({mode}{})", if iso.reflected { ", reflected" } else { "" });
                    if witness {
                        for (v, w) in iso.map.iter().enumerate() {
                            println!("{v}\t{w}");
                        }
                    }
                    Ok(Outcome::Yes)
                }
                None => {
                    println!("not isomorphic ({mode})");
                    Ok(Outcome::No)
                }
            }
        }
        Command::Enumerate { request, output, timing } => {
            let n = request.valence()?;
            let start = Instant::now();
            let e = enumerate_fillings(&request.word, n, request.cap)?;
            let elapsed = start.elapsed();
            if let Some(dir) = &output {
                fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
                for (i, d) in e.discs.iter().enumerate() {
                    write(&dir.join(format!("filling-{i:03}.tri")), &to_tri(d))?;
                }
            }
            print!("{}", table_header(timing));
            let mut row = format!(
                "{}\t{}\t{}\t{}",
                join(&e.word),
                n_label(e.n),
                e.discs.len(),
                e.complete
            );
            if timing {
                write!(row, "\t{:.3}", elapsed.as_secs_f64() * 1e3).unwrap();
            }
            println!("{row}");
            Ok(Outcome::Yes)
        }
        Command::VerifyUniqueness { request, sweep, max_len, alphabet, quiet, timing } => {
            let start = Instant::now();
            let reports = if sweep {
                uniqueness_sweep(&theorem_words(3, max_len, &alphabet), request.cap)
            } else {
                vec![verify_uniqueness(&request.word, request.valence()?, request.cap)?]
            };
            let elapsed = start.elapsed();
            let falsified: Vec<&UniquenessReport> = reports.iter().filter(|r| r.falsified()).collect();
            for r in &falsified {
                eprintln!(
                    "FALSIFIED: word {} with n = {} has {} non-isomorphic fillings",
                    join(&r.word),
                    n_label(r.n),
                    r.count
                );
            }
            if !(sweep && quiet) {
                print!("{}", table_header(false));
                for r in &reports {
                    println!("{}\t{}\t{}\t{}", join(&r.word), n_label(r.n), r.count, r.complete);
                }
            }
            if sweep {
                let complete = reports.iter().filter(|r| r.complete).count();
                let filled = reports.iter().filter(|r| r.count > 0).count();
                println!(
                    "# words {}\tcomplete {}\twith a filling {}\tfalsified {}",
                    reports.len(),
                    complete,
                    filled,
                    falsified.len()
                );
            }
            if timing {
                println!("# wall_ms {:.3}", elapsed.as_secs_f64() * 1e3);
            }
            Ok(if falsified.is_empty() { Outcome::Yes } else { Outcome::No })
        }
        Command::Render { file, output } => {
            let d = load(&file)?;
            let (cut, _) = cut_for(&d)?;
            write(&output, &render_development(&develop(&cut)?))?;
            Ok(Outcome::Yes)
        }
    }
}

fn table_header(timing: bool) -> String {
    if timing {
        "word\tn\tcount\tcomplete\twall_ms\n".into()
    } else {
        "word\tn\tcount\tcomplete\n".into()
    }
}

fn analyze(d: &CombinatorialDisc) -> Result<String> {
    let mut s = String::new();
    writeln!(s, "vertex\tkind\tdegree\tangle\tdefect\torder")?;
    for c in cone_table(d) {
        writeln!(
            s,
            "{}\t{}\t{}\t{}\t{}\t{}",
            c.vertex,
            if c.interior { "interior" } else { "boundary" },
            d.degree(c.vertex),
            c.angle_label(),
            c.defect,
            c.order
        )?;
    }
    let e = weighted_euler(d);
    writeln!(s, "type: {}", type_label(&d.classify_type()?))?;
    writeln!(s, "boundary word: {}", join(&d.boundary_word()))?;
    writeln!(s, "divisor: {}", divisor(d))?;
    writeln!(s, "euler characteristic: {} weighted: {}", e.chi_top, e.chi_weighted)?;
    writeln!(s, "gauss-bonnet residual: {}", check_gauss_bonnet(d))?;
    Ok(s)
}

/// Cut at the irregular vertex, or not at all for a regular disc.
fn cut_for(d: &CombinatorialDisc) -> Result<(CutDisc, Option<usize>)> {
    Ok(match d.classify_type()? {
        TypeClassification::Regular => (CutDisc::uncut(d), None),
        TypeClassification::Irregular { vertex, valence } => {
            (cut_along_shortest_path(d, vertex)?, Some(valence))
        }
    })
}

fn describe_development(cut: &CutDisc, dev: &Development, n: Option<usize>) -> Result<String> {
    let mut s = String::new();
    writeln!(s, "vertex\toriginal\ta\tb")?;
    for (v, z) in dev.coords.iter().enumerate() {
        writeln!(s, "{v}\t{}\t{}\t{}", cut.origin(v), z.a, z.b)?;
    }
    writeln!(s, "holonomy: {}", dev.holonomy)?;
    if let Some(seam) = cut.seam() {
        writeln!(s, "cut path: {}", join(&seam.path))?;
    }
    if let Some((p1, p2)) = dev.cut_points() {
        writeln!(s, "cut endpoint images: {p1} {p2}")?;
    }
    if let Some(c) = dev.cone_image() {
        writeln!(s, "cone vertex image: {c}")?;
    }
    if let Some(n) = n {
        match locate_singularity(dev, n as i64)? {
            Localization::Apex(m) => writeln!(s, "located apex: {m}")?,
            Localization::Degenerate => writeln!(s, "located apex: degenerate")?,
        }
    }
    writeln!(s, "unit edges: {}", dev.edges_are_unit())?;
    Ok(s)
}

fn cover_summary(c: &Cover) -> String {
    let d = &c.disc;
    format!(
        "cover: sheets {} branch {} (base vertex {}, corner distance {}) V={} E={} F={} type {}",
        c.sheets,
        c.branch,
        c.base_branch,
        corner_distance(d, c.branch).map_or_else(|| "-".into(), |x| x.to_string()),
        d.num_vertices(),
        d.num_edges(),
        d.num_faces(),
        d.classify_type().map(|t| type_label(&t)).unwrap_or_else(|e| e.to_string())
    )
}
