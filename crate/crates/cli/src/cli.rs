//! Command-line surface.

use std::fs;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use fillpair_core::origami::Direction;
use fillpair_core::{
    apply_punctured, closed_point_scheme, cylinders, enumerate_point_schemes,
    punctured_point_scheme, singularities, stats, to_origami, validate_scheme,
    verify_coherent_import, CurvePair, EnumerationOptions, Equivalence, Issue, PointScheme, Scheme,
    SurfaceStats, Target,
};

use crate::document::{read_input, write_output, OrigamiDocument, PairDocument, SchemeDocument};
use crate::dot;
use crate::error::CliError;
use crate::render::{self, Style};

#[derive(Debug, Parser)]
#[command(
    name = "fillpair",
    version,
    about = "Minimally intersecting coherent filling pairs"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build a minimal coherent filling pair and write it as a pair document.
    Construct {
        #[arg(long)]
        genus: usize,
        #[arg(long, default_value_t = 0)]
        punctures: usize,
        /// Output file, `-` for standard output (the default).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Write the attaching scheme that `construct` uses.
    Scheme {
        #[arg(long)]
        genus: usize,
        #[arg(long, default_value_t = 0)]
        punctures: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check a pair document and print its surface data.
    Verify {
        file: PathBuf,
        /// Fail unless the pair is minimally intersecting.
        #[arg(long)]
        expect_minimal: bool,
    },
    /// Apply an attaching scheme to its torus seed.
    ApplyScheme {
        scheme: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Put one puncture on the face of each attaching-graph component.
        #[arg(long)]
        punctured: bool,
    },
    /// Print the attaching graph of a scheme and whether it is a tree.
    Agraph {
        scheme: PathBuf,
        /// Write the graph in DOT format.
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Enumerate point-local schemes on the genus-`G` seed that give
    /// minimal closed pairs.
    Enumerate {
        #[arg(long)]
        genus: usize,
        /// Group results into simultaneous-conjugacy classes.
        #[arg(long)]
        dedup: bool,
        /// Maximum number of complete assignments to examine.
        #[arg(long)]
        budget: Option<u64>,
        /// Write one pair document per class representative here.
        #[arg(long)]
        out_dir: Option<PathBuf>,
        /// Also identify a pair with the pair obtained by swapping the curves.
        #[arg(long)]
        swap_curves: bool,
        /// Also identify a pair with the pair with both curves reversed.
        #[arg(long)]
        reverse_orientation: bool,
        /// Also identify a pair with its mirror image.
        #[arg(long)]
        mirror: bool,
    },
    /// Draw a pair as SVG.
    Render {
        file: PathBuf,
        #[arg(long)]
        svg: PathBuf,
        #[arg(long, value_enum, default_value_t = StyleArg::Strip)]
        style: StyleArg,
    },
    /// Write the square-tiled surface of a pair.
    Origami {
        file: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum StyleArg {
    Strip,
    Tiling,
}

impl From<StyleArg> for Style {
    fn from(style: StyleArg) -> Self {
        match style {
            StyleArg::Strip => Style::Strip,
            StyleArg::Tiling => Style::Tiling,
        }
    }
}

/// Where a document goes and where the human-readable summary goes: the
/// summary moves to standard error whenever the document takes standard
/// output.
struct Sink {
    path: PathBuf,
}

impl Sink {
    fn new(out: Option<PathBuf>) -> Self {
        Sink {
            path: out.unwrap_or_else(|| PathBuf::from("-")),
        }
    }

    fn to_stdout(&self) -> bool {
        self.path.as_os_str() == "-"
    }

    fn write(&self, text: &str) -> Result<(), CliError> {
        write_output(&self.path, text)
    }

    fn say(&self, text: &str) {
        if self.to_stdout() {
            eprint!("{text}");
        } else {
            print!("{text}");
        }
    }
}

pub fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Construct {
            genus,
            punctures,
            out,
        } => construct(genus, punctures, Sink::new(out)),
        Command::Scheme {
            genus,
            punctures,
            out,
        } => scheme(genus, punctures, Sink::new(out)),
        Command::Verify {
            file,
            expect_minimal,
        } => verify(&file, expect_minimal),
        Command::ApplyScheme {
            scheme,
            out,
            punctured,
        } => apply(&scheme, punctured, Sink::new(out)),
        Command::Agraph { scheme, dot } => agraph(&scheme, dot),
        Command::Enumerate {
            genus,
            dedup,
            budget,
            out_dir,
            swap_curves,
            reverse_orientation,
            mirror,
        } => {
            let mut options = EnumerationOptions {
                dedup,
                equivalence: Equivalence {
                    swap_curves,
                    reverse_orientation,
                    mirror,
                },
                ..EnumerationOptions::default()
            };
            if let Some(budget) = budget {
                options.budget = budget;
            }
            enumerate(genus, &options, out_dir.as_deref())
        }
        Command::Render { file, svg, style } => {
            let pair = load_pair(&file)?.1;
            write_output(&svg, &render::render(&pair, style.into())?)
        }
        Command::Origami { file, out } => origami(&file, Sink::new(out)),
    }
}

fn load_pair(path: &Path) -> Result<(PairDocument, CurvePair), CliError> {
    let doc = PairDocument::parse(&read_input(path)?)?;
    let pair = doc.to_pair()?;
    Ok((doc, pair))
}

fn load_scheme(path: &Path) -> Result<(SchemeDocument, Scheme), CliError> {
    let doc = SchemeDocument::parse(&read_input(path)?)?;
    let scheme = doc.to_scheme()?;
    Ok((doc, scheme))
}

/// The scheme behind `construct`, with a short name.
pub fn construction(
    genus: usize,
    punctures: usize,
) -> Result<(PointScheme, &'static str), CliError> {
    if punctures == 0 {
        let scheme = closed_point_scheme(genus)?;
        Ok((scheme, if genus % 2 == 1 { "odd" } else { "even" }))
    } else {
        Ok((punctured_point_scheme(genus, punctures)?, "punctured"))
    }
}

fn is_minimal(s: &SurfaceStats, pair: &CurvePair) -> bool {
    if s.genus == 0 || s.vertices != s.minimal_crossings() {
        return false;
    }
    if s.punctures == 0 {
        s.faces == 1
    } else {
        s.faces == s.punctures && pair.punctures().len() == s.faces
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn summary(pair: &CurvePair) -> String {
    let s = stats(pair);
    format!(
        "n: {}\nfaces: {}\neuler_characteristic: {}\ngenus: {}\npunctures: {}\ncoherent: yes\nminimal: {}\n",
        s.vertices,
        s.faces,
        s.euler_characteristic,
        s.genus,
        s.punctures,
        yes_no(is_minimal(&s, pair))
    )
}

fn construct(genus: usize, punctures: usize, sink: Sink) -> Result<(), CliError> {
    let (point_scheme, name) = construction(genus, punctures)?;
    let scheme = point_scheme.to_scheme();
    let pair = if punctures == 0 {
        scheme.apply()
    } else {
        apply_punctured(&scheme)?
    };
    let s = stats(&pair);
    let expected_faces = punctures.max(1);
    if s.genus != genus || s.faces != expected_faces || !is_minimal(&s, &pair) {
        return Err(CliError::failure(format!(
            "construction check failed: n = {}, {} faces, genus {}",
            s.vertices, s.faces, s.genus
        )));
    }
    let doc = PairDocument::from_pair(&pair)
        .with_provenance(Some(name), SchemeDocument::from_point_scheme(&point_scheme));
    sink.write(&doc.to_json())?;
    sink.say(&summary(&pair));
    Ok(())
}

fn scheme(genus: usize, punctures: usize, sink: Sink) -> Result<(), CliError> {
    let (point_scheme, name) = construction(genus, punctures)?;
    let doc = SchemeDocument::from_point_scheme(&point_scheme);
    sink.write(&doc.to_json())?;
    sink.say(&format!(
        "{name} scheme: seed {}, {} handles\n",
        point_scheme.seed_m(),
        point_scheme.handle_count()
    ));
    Ok(())
}

fn verify(path: &Path, expect_minimal: bool) -> Result<(), CliError> {
    let (doc, pair) = load_pair(path)?;
    let mut failures: Vec<String> = Vec::new();
    let s = stats(&pair);

    let mut out = format!(
        "n: {}\nfaces: {}\neuler_characteristic: {}\ngenus: {}\npunctures: {}\n",
        s.vertices, s.faces, s.euler_characteristic, s.genus, s.punctures
    );
    match &doc.signs {
        None => out.push_str("coherent: yes (no signs given, all crossings positive)\n"),
        Some(signs) => {
            let report = verify_coherent_import(&pair.clone().without_punctures(), signs)?;
            if report.coherent {
                out.push_str("coherent: yes\n");
            } else {
                out.push_str(&format!(
                    "coherent: no (negative crossings {:?}; algebraic {} < geometric {}; signed surface has {} faces, genus {})\n",
                    report.negative, report.algebraic, report.geometric, report.faces, report.genus
                ));
                failures.push("not coherent".into());
            }
        }
    }

    let origami = to_origami(&pair)?;
    out.push_str(&format!(
        "cylinders: {} horizontal, {} vertical\n",
        cylinders(&origami, Direction::Horizontal).len(),
        cylinders(&origami, Direction::Vertical).len()
    ));
    let profile = singularities(&pair);
    out.push_str(&format!("singularities: {profile}\n"));

    let minimal = is_minimal(&s, &pair);
    out.push_str(&format!(
        "minimal: {} (minimal crossing number {})\n",
        yes_no(minimal),
        s.minimal_crossings()
    ));
    if expect_minimal && !minimal {
        let expected_faces = s.punctures.max(1);
        failures.push(format!(
            "not minimal: {} crossings and {} faces, expected {} and {}",
            s.vertices,
            s.faces,
            s.minimal_crossings(),
            expected_faces
        ));
    }

    if let Some(provenance) = &doc.provenance {
        let scheme = provenance.scheme.to_scheme()?;
        let rebuilt = scheme.apply();
        let target = if s.punctures == 0 {
            Target::Closed { genus: s.genus }
        } else {
            Target::Punctured {
                genus: s.genus,
                punctures: s.punctures,
            }
        };
        let report = validate_scheme(&scheme, target);
        let reproduces = rebuilt.alpha() == pair.alpha() && rebuilt.beta() == pair.beta();
        let prediction = match report.predicted {
            Some(p) => format!("predicted {} faces and genus {}", p.faces, p.genus),
            None => format!(
                "between {} and {} faces",
                report.face_bounds.0, report.face_bounds.1
            ),
        };
        out.push_str(&format!(
            "provenance: {}seed {}, {} handles, attaching graph {}, {prediction}, {}\n",
            provenance
                .construction
                .as_deref()
                .map(|c| format!("{c} construction, "))
                .unwrap_or_default(),
            scheme.seed_m(),
            scheme.handle_count(),
            dot::verdict(&scheme.a_graph()),
            if reproduces {
                "reproduces the pair"
            } else {
                "does NOT reproduce the pair"
            }
        ));
        if !reproduces {
            failures.push("provenance scheme does not reproduce the pair".into());
        }
        if report.issues.contains(&Issue::PredictionMismatch) {
            failures.push("attaching-graph prediction disagrees with the pair".into());
        }
        if expect_minimal {
            for issue in &report.issues {
                failures.push(format!("scheme: {issue}"));
            }
        }
    }

    print!("{out}");
    if failures.is_empty() {
        println!("result: ok");
        Ok(())
    } else {
        println!("result: FAILED");
        Err(CliError::failure(failures.join("; ")))
    }
}

fn apply(path: &Path, punctured: bool, sink: Sink) -> Result<(), CliError> {
    let (doc, scheme) = load_scheme(path)?;
    let pair = if punctured {
        apply_punctured(&scheme)?
    } else {
        scheme.apply()
    };
    let s = stats(&pair);
    let expected = scheme.seed_m() + scheme.handle_count();
    if s.vertices != expected {
        return Err(CliError::failure(format!(
            "applied scheme has {} crossings, expected {expected}",
            s.vertices
        )));
    }
    let out = PairDocument::from_pair(&pair).with_provenance(None, doc);
    sink.write(&out.to_json())?;
    sink.say(&summary(&pair));
    sink.say(&format!(
        "attaching graph: {}\n",
        dot::verdict(&scheme.a_graph())
    ));
    Ok(())
}

fn agraph(path: &Path, dot_path: Option<PathBuf>) -> Result<(), CliError> {
    let (_, scheme) = load_scheme(path)?;
    let graph = scheme.a_graph();
    let (low, high) = graph.boundary_count_bounds();
    let mut text = format!(
        "vertices: {}\nedges: {}\ncomponents: {}\nindependent cycles: {}\nverdict: {}\n",
        graph.vertex_count(),
        graph.edge_count(),
        graph.component_count(),
        graph.cyclomatic_number(),
        dot::verdict(&graph),
    );
    match graph.predicted_boundary_count() {
        Some(faces) => text.push_str(&format!(
            "predicted faces: {faces}\npredicted genus: {}\n",
            1 + scheme.seed_m() - graph.component_count()
        )),
        None => text.push_str(&format!("predicted faces: between {low} and {high}\n")),
    }
    match dot_path {
        Some(p) => {
            let sink = Sink::new(Some(p));
            sink.write(&dot::to_dot(&scheme))?;
            sink.say(&text);
        }
        None => print!("{text}"),
    }
    Ok(())
}

fn describe(scheme: &PointScheme) -> String {
    let parts: Vec<String> = scheme
        .surgeries()
        .iter()
        .map(|s| format!("{}:{}", s.crossing, s.kind))
        .collect();
    format!("seed {} [{}]", scheme.seed_m(), parts.join(" "))
}

fn enumerate(
    genus: usize,
    options: &EnumerationOptions,
    out_dir: Option<&Path>,
) -> Result<(), CliError> {
    let result = enumerate_point_schemes(genus, options)?;
    if let Some(dir) = out_dir {
        fs::create_dir_all(dir)
            .map_err(|e| CliError::failure(format!("cannot create {}: {e}", dir.display())))?;
    }
    for (k, class) in result.classes.iter().enumerate() {
        let rep = &result.survivors[class.representative()];
        let s = stats(&rep.pair);
        if s.faces != 1 || s.genus != genus {
            return Err(CliError::failure(format!(
                "survivor {} is not minimal: {} faces, genus {}",
                describe(&rep.scheme),
                s.faces,
                s.genus
            )));
        }
        let target = match out_dir {
            Some(dir) => {
                let file = dir.join(format!("genus{genus}-class{k}.json"));
                let doc = PairDocument::from_pair(&rep.pair).with_provenance(
                    Some("enumeration"),
                    SchemeDocument::from_point_scheme(&rep.scheme),
                );
                write_output(&file, &doc.to_json())?;
                file.display().to_string()
            }
            None => describe(&rep.scheme),
        };
        println!(
            "class {k}: size {}, representative {target}",
            class.members.len()
        );
    }
    eprintln!(
        "examined {} assignments, {} trees, {} survivors, {} classes",
        result.candidates,
        result.trees,
        result.survivors.len(),
        result.classes.len()
    );
    if !result.complete {
        return Err(CliError::failure(format!(
            "budget of {} assignments exhausted before the search finished",
            options.budget
        )));
    }
    Ok(())
}

fn origami(path: &Path, sink: Sink) -> Result<(), CliError> {
    let (_, pair) = load_pair(path)?;
    let origami = to_origami(&pair)?;
    if origami.to_pair()? != pair.clone().without_punctures() {
        return Err(CliError::failure(
            "origami does not read back to the same pair",
        ));
    }
    let doc = OrigamiDocument::from_origami(&origami);
    sink.write(&doc.to_json())?;
    sink.say(&format!(
        "squares: {}\ncylinders: {} horizontal, {} vertical\nsingularities: {}\n",
        origami.squares(),
        cylinders(&origami, Direction::Horizontal).len(),
        cylinders(&origami, Direction::Vertical).len(),
        singularities(&pair)
    ));
    Ok(())
}
