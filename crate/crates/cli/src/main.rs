use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use lattice_forge::electronic::{dirac_scan, graphene_band, huckel};
use lattice_forge::io::{export_realization, export_surface, realization_from_json, CrystalInput, Format, GeometryFile};
use lattice_forge::nanotube::{atoms_per_cell, build_swnt, classify_metallic, ChiralIndex};
use lattice_forge::realization::{
    energy, periodic_girth, realize_harmonic_direct, realize_periodic, verify_standard, SupercellOptions,
    DEFAULT_GIRTH_CAP,
};
use lattice_forge::surface::{relax_to_minimal, shapes, Fixed};
use lattice_forge::{CrystalRealization, DiscreteSurface, Error, MultiGraph, StandardReport};

const STANDARD_TOL: f64 = 1e-9;

#[derive(Parser)]
#[command(name = "lattice-forge", version, about = "Standard realizations of topological crystals")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Homology,
    Direct,
}

#[derive(Clone, Copy, ValueEnum)]
enum Out {
    Json,
    Xyz,
    Obj,
}

impl From<Out> for Format {
    fn from(o: Out) -> Format {
        match o {
            Out::Json => Format::Json,
            Out::Xyz => Format::Xyz,
            Out::Obj => Format::Obj,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Shape {
    Tetrahedron,
    Cube,
    C60,
    Graphene,
    Schwarzite,
}

#[derive(Subcommand)]
enum Command {
    /// Build, verify and export the standard realization of a .cg crystal graph.
    Realize {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "homology")]
        method: Method,
        /// Cells per period direction (one count, or one per dimension).
        #[arg(long, num_args = 1..)]
        supercell: Vec<usize>,
        #[arg(long, value_enum)]
        out: Option<Out>,
        #[arg(long)]
        output: Option<PathBuf>,
        /// Add the far ends of cotree edges to xyz/obj output.
        #[arg(long)]
        building_block: bool,
    },
    /// Recheck standardness of a stored realization JSON.
    Verify { file: PathBuf },
    /// Curvature of a trivalent surface given as geometry JSON.
    Curvature {
        file: PathBuf,
        #[arg(long)]
        per_vertex: bool,
        #[arg(long)]
        check_gauss: bool,
        #[arg(long)]
        check_area_variation: bool,
    },
    /// Face statistics and Euler characteristic of a closed surface.
    Euler { file: PathBuf },
    /// Relax a surface towards H = 0.
    Minimal {
        file: PathBuf,
        #[arg(long, default_value_t = 1e-8)]
        tol: f64,
        #[arg(long, default_value_t = 200)]
        max_iters: usize,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Single-walled nanotube with chiral index (C1, C2).
    Nanotube {
        #[arg(allow_negative_numbers = true)]
        c1: i64,
        #[arg(allow_negative_numbers = true)]
        c2: i64,
        #[arg(long, default_value_t = 1)]
        periods: usize,
        #[arg(long, default_value_t = 1.0)]
        lambda: f64,
        #[arg(long)]
        classify: bool,
        #[arg(long, value_enum)]
        out: Option<Out>,
    },
    /// Graphene band at the grid points and its Dirac points.
    Band {
        #[arg(long, default_value_t = 12)]
        grid: usize,
        #[arg(long, default_value_t = 1e-9)]
        dirac_tol: f64,
    },
    /// Hückel spectrum of a .cg graph or geometry JSON.
    Spectrum {
        file: PathBuf,
        #[arg(long)]
        electrons: Option<usize>,
    },
    /// Girth of the periodic lift of a labelled graph.
    Girth {
        file: PathBuf,
        #[arg(long, default_value_t = DEFAULT_GIRTH_CAP)]
        cap: usize,
    },
    /// Emit a bundled surface as geometry.
    Shape {
        #[arg(value_enum)]
        name: Shape,
        #[arg(long, value_enum, default_value = "json")]
        out: Out,
    },
}

enum Failure {
    Lib(Error),
    Input(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

type CliResult = Result<String, Failure>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli.command) {
        Ok(out) => {
            print!("{}", out);
            ExitCode::SUCCESS
        }
        Err(Failure::Lib(e)) => {
            eprintln!("error: {}", e);
            ExitCode::from(if e.is_numerical() { 2 } else { 1 })
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {}", msg);
            ExitCode::from(1)
        }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {}", path.display(), e)))
}

fn write(path: &Path, text: &str) -> Result<(), Failure> {
    std::fs::write(path, text).map_err(|e| Failure::Input(format!("{}: {}", path.display(), e)))
}

fn is_json(path: &Path) -> bool {
    path.extension().is_some_and(|e| e == "json")
}

fn load_surface(path: &Path) -> Result<DiscreteSurface, Failure> {
    Ok(GeometryFile::parse(&read(path)?)?.to_surface()?)
}

/// Graph and, when known, its labels and dimension.
fn load_graph(path: &Path) -> Result<(MultiGraph, Option<(usize, Vec<Vec<i64>>)>), Failure> {
    let text = read(path)?;
    if is_json(path) {
        let geo = GeometryFile::parse(&text)?;
        if let Some(labels) = &geo.edge_labels {
            let g = MultiGraph::new(geo.vertices.len(), geo.edges.clone())?;
            return Ok((g, Some((3, labels.clone()))));
        }
        let s = geo.to_surface()?;
        let (g, labels) = s.labeled_graph()?;
        let labelled = labels.iter().flatten().any(|&x| x != 0);
        Ok((g, labelled.then_some((3, labels))))
    } else {
        let input = CrystalInput::parse(&text)?;
        let labels = input.resolved_labels().ok();
        Ok((input.graph, labels))
    }
}

/// Fixed precision with negative zero folded away.
fn num(x: f64) -> String {
    let s = format!("{:.12}", x);
    if s.trim_start_matches('-').chars().all(|c| c == '0' || c == '.') {
        s.trim_start_matches('-').to_string()
    } else {
        s
    }
}

fn report_lines(out: &mut String, rep: &StandardReport) {
    writeln!(out, "balance residual: {:.3e}", rep.balance_residual).unwrap();
    writeln!(out, "edge sum residual: {:.3e}", rep.edge_sum_residual).unwrap();
    writeln!(out, "eeT residual: {:.3e}", rep.eet_residual).unwrap();
    writeln!(out, "closure residual: {:.3e}", rep.closure_residual).unwrap();
    writeln!(out, "c: {}", num(rep.c)).unwrap();
    writeln!(out, "standard: {}", rep.is_standard(STANDARD_TOL)).unwrap();
}

fn realization_report(r: &CrystalRealization) -> String {
    let mut out = String::new();
    report_lines(&mut out, &verify_standard(r));
    let en = energy(r);
    writeln!(out, "energy: {}", num(en.raw_energy)).unwrap();
    writeln!(out, "normalized energy: {}", num(en.normalized_energy)).unwrap();
    writeln!(out, "volume: {}", num(en.volume)).unwrap();
    // normalized to unit covolume so that both solvers print the same multiset
    let ips: Vec<String> = r.unit_volume().inner_product_multiset().into_iter().map(num).collect();
    writeln!(out, "inner products: {}", ips.join(" ")).unwrap();
    out
}

fn run(cmd: Command) -> CliResult {
    match cmd {
        Command::Realize { file, method, supercell, out, output, building_block } => {
            let input = CrystalInput::parse(&read(&file)?)?;
            let (d, labels) = input.resolved_labels()?;
            let r = match method {
                Method::Homology => realize_periodic(&input.graph, &labels, d, input.basis.as_ref())?.realization,
                Method::Direct => realize_harmonic_direct(&input.graph, &labels, d)?.realization,
            };
            let counts = match supercell.len() {
                0 => vec![1; d],
                1 => vec![supercell[0]; d],
                _ => supercell,
            };
            let mut report = realization_report(&r);
            let Some(fmt) = out else { return Ok(report) };
            let opts = SupercellOptions { wrap: false, building_block };
            let text = export_realization(&r, &input.vertex_names, fmt.into(), &counts, opts)?;
            match output {
                Some(path) => {
                    write(&path, &text)?;
                    writeln!(report, "wrote {}", path.display()).unwrap();
                    Ok(report)
                }
                None => {
                    eprint!("{}", report);
                    Ok(text)
                }
            }
        }
        Command::Verify { file } => {
            let r = realization_from_json(&read(&file)?)?;
            let rep = verify_standard(&r);
            let mut out = String::new();
            report_lines(&mut out, &rep);
            if rep.is_standard(STANDARD_TOL) {
                Ok(out)
            } else {
                print!("{}", out);
                Err(Failure::Input("realization is not standard".into()))
            }
        }
        Command::Curvature { file, per_vertex, check_gauss, check_area_variation } => {
            let s = load_surface(&file)?;
            let map = s.curvature_map()?;
            let mut out = String::new();
            let (kmin, kmax) = min_max(&map.k);
            let (hmin, hmax) = min_max(&map.h);
            writeln!(out, "vertices: {}", s.vertex_count()).unwrap();
            writeln!(out, "K range: {} {}", num(kmin), num(kmax)).unwrap();
            writeln!(out, "H range: {} {}", num(hmin), num(hmax)).unwrap();
            writeln!(out, "total area: {}", num(map.total_area)).unwrap();
            if per_vertex {
                writeln!(out, "vertex K H area").unwrap();
                for v in 0..s.vertex_count() {
                    writeln!(out, "{} {} {} {}", v, num(map.k[v]), num(map.h[v]), num(map.local_area[v])).unwrap();
                }
            }
            if check_gauss {
                writeln!(out, "gauss identity residual: {:.3e}", s.max_gauss_identity_residual()?).unwrap();
            }
            if check_area_variation {
                let rep = s.area_first_variation_check(&[1e-2, 1e-3, 1e-4])?;
                writeln!(out, "predicted dA: {}", num(rep.predicted)).unwrap();
                for e in &rep.entries {
                    writeln!(out, "t {:.0e}: fd {} discrepancy {:.3e}", e.t, num(e.finite_difference), e.discrepancy)
                        .unwrap();
                }
            }
            Ok(out)
        }
        Command::Euler { file } => {
            let s = load_surface(&file)?;
            let st = s.euler_stats()?;
            let mut out = String::new();
            writeln!(out, "V = {}", st.v).unwrap();
            writeln!(out, "E = {}", st.e).unwrap();
            writeln!(out, "F = {}", st.f).unwrap();
            for (k, n) in &st.histogram {
                writeln!(out, "N{} = {}", k, n).unwrap();
            }
            writeln!(out, "χ = {}", st.chi_from_counts).unwrap();
            writeln!(out, "χ from face sizes = {}", st.chi_from_formula).unwrap();
            Ok(out)
        }
        Command::Minimal { file, tol, max_iters, output } => {
            let s = load_surface(&file)?;
            let res = relax_to_minimal(&s, &Fixed::Lattice, max_iters, tol)?;
            let mut out = String::new();
            for (i, h) in res.history.iter().enumerate() {
                writeln!(out, "iter {}: max |H| = {:.6e}", i, h).unwrap();
            }
            writeln!(out, "converged: {}", res.converged).unwrap();
            if let Some(path) = output {
                write(&path, &export_surface(&res.surface, Format::Json)?)?;
                writeln!(out, "wrote {}", path.display()).unwrap();
            }
            Ok(out)
        }
        Command::Nanotube { c1, c2, periods, lambda, classify, out } => {
            let ci = ChiralIndex::with_lambda(c1, c2, lambda)?;
            if classify {
                return Ok(format!("{}\n", classify_metallic(&ci)));
            }
            let tube = build_swnt(&ci, periods)?;
            if let Some(fmt) = out {
                return Ok(export_surface(&tube.surface, fmt.into())?);
            }
            let f = &tube.frame;
            let mut s = String::new();
            writeln!(s, "chiral vector: ({}, {})", f.chiral.0, f.chiral.1).unwrap();
            writeln!(s, "translation: ({}, {})", f.primitive_translation.0, f.primitive_translation.1).unwrap();
            writeln!(s, "atoms per cell: {}", atoms_per_cell(&ci)).unwrap();
            writeln!(s, "atoms: {}", tube.surface.vertex_count()).unwrap();
            writeln!(s, "conductivity: {}", classify_metallic(&ci)).unwrap();
            Ok(s)
        }
        Command::Band { grid, dirac_tol } => {
            let pts = dirac_scan(grid, dirac_tol)?;
            let mut out = String::new();
            writeln!(out, "grid: {}", grid).unwrap();
            writeln!(out, "dirac points: {}", pts.len()).unwrap();
            for p in &pts {
                let (lo, hi) = graphene_band(p.xi);
                writeln!(out, "({}, {}) xi = ({}, {}) E = {} {}", p.i, p.j, num(p.xi[0]), num(p.xi[1]), num(lo), num(hi))
                    .unwrap();
            }
            Ok(out)
        }
        Command::Spectrum { file, electrons } => {
            let (g, _) = load_graph(&file)?;
            let rep = huckel(&g, electrons.unwrap_or(g.vertex_count()))?;
            let mut out = String::new();
            writeln!(out, "open shell: {}", rep.open_shell).unwrap();
            writeln!(out, "eigenvalue occupation").unwrap();
            for (e, o) in rep.energies.iter().zip(&rep.occupations) {
                writeln!(out, "{} {}", num(*e), num(*o)).unwrap();
            }
            let dens: Vec<String> = rep.density.iter().map(|x| num(*x)).collect();
            writeln!(out, "density: {}", dens.join(" ")).unwrap();
            Ok(out)
        }
        Command::Girth { file, cap } => {
            let (g, labels) = load_graph(&file)?;
            let (_, labels) = labels.ok_or_else(|| Failure::Input("graph has no period labels".into()))?;
            Ok(format!("girth: {}\n", periodic_girth(&g, &labels, cap)?))
        }
        Command::Shape { name, out } => {
            let s = match name {
                Shape::Tetrahedron => shapes::tetrahedron(1.0),
                Shape::Cube => shapes::cube(1.0),
                Shape::C60 => shapes::truncated_icosahedron(1.0),
                Shape::Graphene => shapes::graphene_sheet(3, 4),
                Shape::Schwarzite => shapes::p_schwarzite(),
            };
            Ok(export_surface(&s, out.into())?)
        }
    }
}

fn min_max(xs: &[f64]) -> (f64, f64) {
    xs.iter().fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), &x| (lo.min(x), hi.max(x)))
}
