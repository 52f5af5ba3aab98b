//! `symat`: batch front end for symplectic matroid computations.

mod report;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use symat::ffmat::{parse_matrix, write_matrix, FieldSpec, MatrixFile, Residue, DEFAULT_ENUMERATION_CAP};
use symat::graphs::{
    expected_graphical_rank, graph_state_stabilizer, graphical_symplectic_matroid, lagrangian_from_graph, parse_graph,
    GraphFile, StarMode,
};
use symat::poly::{compare_tm_and_interlace, interlace, restricted_tutte_martin, ShiftedPolynomial, DEFAULT_TERM_CAP};
use symat::qss::{
    induced_access_structure, is_quantum_access_structure, lift_identically_self_dual, ordinary_access_structure,
    secret_sharing_report, AccessStructure, DealerVerdict,
};
use symat::smatroid::{parse_matroid, write_matroid, JElement, OrdinaryMatroid, SymplecticMatroid};
use symat::sympl::{code_distance, is_homogeneous_form, make_stabilizer, torus_action, StabilizerMatrix};
use symat::text::leading_keyword;
use symat::transform::{contraction, contraction_relabeled, direct_sum, higgs_lift, truncation};

use report::{Format, Report, Value};

#[derive(Parser)]
#[command(name = "symat", version, about = "Symplectic matroids, stabilizer codes and graph states")]
struct Cli {
    /// Prime field used when a matrix file has no `field` line
    #[arg(long, global = true)]
    field: Option<u32>,
    /// Enumeration cap for code distance and polynomial sums
    #[arg(long, global = true)]
    cap: Option<u64>,
    /// How stars on a cycle are counted by `graphical`
    #[arg(long, global = true, default_value = "within")]
    star_mode: StarMode,
    #[arg(long, global = true, value_enum, default_value = "human")]
    format: Format,
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Subcommand)]
enum Verb {
    /// Check that the rows of a matrix span an isotropic subspace
    Isotropic { file: PathBuf },
    /// Bases of the matroid represented by a matrix
    Matroid {
        file: PathBuf,
        /// Also write the bases as a matroid file
        #[arg(long)]
        save: Option<PathBuf>,
    },
    /// Minimal admissible sets contained in no basis
    Circuits { file: PathBuf },
    /// Run the maximality oracle over every admissible ordering (n <= 7)
    Maximality { file: PathBuf },
    /// Homogeneity and Lagrangian predicates
    Homogeneous { file: PathBuf },
    /// Dual of a Lagrangian matroid and self-duality
    Dual {
        file: PathBuf,
        #[arg(long)]
        save: Option<PathBuf>,
    },
    /// Bases containing an element, with the element removed
    Contract {
        file: PathBuf,
        /// Element such as `3` or `3*`
        element: String,
        /// Drop the contracted index and renumber the rest
        #[arg(long)]
        relabel: bool,
        #[arg(long)]
        save: Option<PathBuf>,
    },
    /// Admissible subsets of bases one element smaller
    Truncate {
        file: PathBuf,
        #[arg(long)]
        save: Option<PathBuf>,
    },
    /// Admissible supersets of bases one element larger
    Lift {
        file: PathBuf,
        #[arg(long)]
        save: Option<PathBuf>,
    },
    /// Direct sum, second ground set shifted past the first
    Dsum {
        left: PathBuf,
        right: PathBuf,
        #[arg(long)]
        save: Option<PathBuf>,
    },
    /// Rescale columns by a torus element and compare the matroids
    Torus {
        file: PathBuf,
        /// Nonzero residues t_1,...,t_n
        #[arg(long, value_delimiter = ',', required = true)]
        vector: Vec<i64>,
        #[arg(long)]
        save: Option<PathBuf>,
    },
    /// Restricted Tutte-Martin polynomial
    PolyTm { file: PathBuf },
    /// Interlace polynomial of a graph over GF(2)
    PolyInterlace { file: PathBuf },
    /// Compare the Tutte-Martin polynomial of a graph state with the interlace polynomial
    PolyVerify { file: PathBuf },
    /// Stabilizer matrix [I | A] of a graph state
    GraphState {
        file: PathBuf,
        #[arg(long)]
        save: Option<PathBuf>,
    },
    /// Graphical symplectic matroid of an edge-labeled graph
    Graphical {
        file: PathBuf,
        #[arg(long)]
        save: Option<PathBuf>,
    },
    /// Parameters and distance of a stabilizer code
    CodeInfo { file: PathBuf },
    /// Access structures induced through a dealer
    Qss {
        file: PathBuf,
        #[arg(long, conflicts_with = "all_dealers", required_unless_present = "all_dealers")]
        dealer: Option<u32>,
        #[arg(long)]
        all_dealers: bool,
    },
    /// Lift an identically self-dual ordinary matroid
    LiftIsd {
        file: PathBuf,
        #[arg(long)]
        save: Option<PathBuf>,
    },
}

enum Failure {
    /// unreadable or ill-formed input
    Input(String),
    /// well-formed input rejected by a module
    Validation(String),
}

impl Failure {
    fn invalid(e: impl std::fmt::Display) -> Self {
        Self::Validation(e.to_string())
    }
}

type Outcome = Result<Report, Failure>;

struct Context {
    field: Option<FieldSpec>,
    cap: Option<u64>,
    star_mode: StarMode,
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn write(path: &Path, contents: &str) -> Result<(), Failure> {
    fs::write(path, contents).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

impl Context {
    fn matrix(&self, path: &Path) -> Result<MatrixFile, Failure> {
        let mf =
            parse_matrix(&read(path)?, self.field).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
        if let Some(f) = self.field {
            if mf.matrix.field() != f {
                return Err(Failure::Validation(format!(
                    "FieldConflict: file declares {} but --field asks for {f}",
                    mf.matrix.field()
                )));
            }
        }
        Ok(mf)
    }

    fn stabilizer(&self, path: &Path) -> Result<StabilizerMatrix, Failure> {
        make_stabilizer(self.matrix(path)?.matrix).map_err(Failure::invalid)
    }

    /// A matroid file, the matroid represented by a matrix file, or the
    /// Lagrangian matroid of a graph state.
    fn symplectic(&self, path: &Path) -> Result<SymplecticMatroid, Failure> {
        let text = read(path)?;
        match leading_keyword(&text) {
            Some("ground") => {
                let mf = parse_matroid(&text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
                mf.into_symplectic().map_err(Failure::invalid)
            }
            Some("graph") => {
                lagrangian_from_graph(&self.graph(path)?.graph, self.graph_field()).map_err(Failure::invalid)
            }
            _ => SymplecticMatroid::from_stabilizer(&self.stabilizer(path)?).map_err(Failure::invalid),
        }
    }

    fn ordinary(&self, path: &Path) -> Result<OrdinaryMatroid, Failure> {
        let mf = parse_matroid(&read(path)?).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
        mf.into_ordinary().map_err(Failure::invalid)
    }

    fn graph(&self, path: &Path) -> Result<GraphFile, Failure> {
        parse_graph(&read(path)?).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
    }

    fn graph_field(&self) -> FieldSpec {
        self.field.unwrap_or_else(FieldSpec::gf2)
    }
}

fn bases_report(r: &mut Report, m: &SymplecticMatroid) {
    r.int("ground", m.n());
    r.int("rank", m.rank());
    r.int("bases", m.bases().len());
    r.sets("basis", m.bases());
}

/// Generator rows as `a | b`.
fn rows_report(r: &mut Report, s: &StabilizerMatrix) {
    let show = |v: &[Residue]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ");
    for row in s.generators().row_iter() {
        let (a, b) = row.split_at(s.n());
        r.text("row", format!("{} | {}", show(a), show(b)));
    }
}

fn save_matroid(save: &Option<PathBuf>, m: &SymplecticMatroid) -> Result<(), Failure> {
    match save {
        Some(p) => write(p, &write_matroid(m)),
        None => Ok(()),
    }
}

fn poly_report(r: &mut Report, prefix: &str, p: &ShiftedPolynomial) {
    r.push(format!("{prefix}(x-1)-basis"), Value::List(p.coefficients().iter().map(|&c| c as i128).collect()));
    r.push(format!("{prefix}x-basis"), Value::List(p.to_monomial()));
    r.text(&format!("{prefix}polynomial"), p.to_string());
}

fn access_report(r: &mut Report, a: &AccessStructure) {
    r.int("dealer", a.dealer() as usize);
    r.int("minimal-sets", a.minimal_sets().len());
    for &s in a.minimal_sets() {
        r.push("minimal-set", Value::plain(s));
    }
    r.text("verdict", if is_quantum_access_structure(a) { "VALID" } else { "INVALID" });
}

fn run(cx: &Context, verb: Verb) -> Outcome {
    let mut r = Report::default();
    match verb {
        Verb::Isotropic { file } => {
            let m = cx.matrix(&file)?.matrix;
            r.text("field", m.field().to_string());
            r.int("rows", m.rows());
            r.int("columns", m.cols());
            r.flag("isotropic", symat::sympl::is_isotropic(&m).map_err(Failure::invalid)?);
            r.flag("independent-rows", m.rank() == m.rows());
        }
        Verb::Matroid { file, save } => {
            let m = cx.symplectic(&file)?;
            bases_report(&mut r, &m);
            save_matroid(&save, &m)?;
        }
        Verb::Circuits { file } => {
            let m = cx.symplectic(&file)?;
            let c = m.circuits();
            r.int("circuits", c.len());
            r.sets("circuit", &c);
        }
        Verb::Maximality { file } => {
            let m = cx.symplectic(&file)?;
            let violation = m.maximality_violation().map_err(Failure::invalid)?;
            r.flag("maximality", violation.is_none());
            if let Some(w) = violation {
                r.text("no-maximum-under", w.to_string());
            }
        }
        Verb::Homogeneous { file } => {
            if matches!(leading_keyword(&read(&file)?), Some("field" | "stabilizer" | "matrix")) {
                r.flag("homogeneous-form", is_homogeneous_form(&cx.stabilizer(&file)?));
            }
            let m = cx.symplectic(&file)?;
            r.flag("homogeneous", m.is_homogeneous());
            r.flag("lagrangian", m.is_lagrangian());
        }
        Verb::Dual { file, save } => {
            let m = cx.symplectic(&file)?;
            let dual = m.lagrangian_dual().map_err(Failure::invalid)?;
            r.flag("self-dual", dual == m);
            bases_report(&mut r, &dual);
            r.sets("cocircuit", &m.cocircuits().map_err(Failure::invalid)?);
            save_matroid(&save, &dual)?;
        }
        Verb::Contract { file, element, relabel, save } => {
            let m = cx.symplectic(&file)?;
            let a: JElement = element.parse().map_err(Failure::invalid)?;
            let c = if relabel { contraction_relabeled(&m, a) } else { contraction(&m, a) };
            let c = c.map_err(Failure::invalid)?;
            bases_report(&mut r, &c);
            save_matroid(&save, &c)?;
        }
        Verb::Truncate { file, save } => {
            let t = truncation(&cx.symplectic(&file)?).map_err(Failure::invalid)?;
            r.flag("degenerate", t.is_degenerate());
            bases_report(&mut r, &t);
            save_matroid(&save, &t)?;
        }
        Verb::Lift { file, save } => {
            let l = higgs_lift(&cx.symplectic(&file)?).map_err(Failure::invalid)?;
            r.flag("oracle-checked", l.n() <= symat::smatroid::MAX_ORACLE_GROUND);
            bases_report(&mut r, &l);
            save_matroid(&save, &l)?;
        }
        Verb::Dsum { left, right, save } => {
            let s = direct_sum(&cx.symplectic(&left)?, &cx.symplectic(&right)?).map_err(Failure::invalid)?;
            bases_report(&mut r, &s);
            save_matroid(&save, &s)?;
        }
        Verb::Torus { file, vector, save } => {
            let s = cx.stabilizer(&file)?;
            let f = s.field();
            let t: Vec<Residue> = vector.iter().map(|&x| f.reduce(x)).collect();
            let moved = torus_action(&s, &t).map_err(Failure::invalid)?;
            let before = SymplecticMatroid::from_stabilizer(&s).map_err(Failure::invalid)?;
            let after = SymplecticMatroid::from_stabilizer(&moved).map_err(Failure::invalid)?;
            rows_report(&mut r, &moved);
            r.flag("bases-unchanged", before == after);
            if let Some(p) = save {
                write(&p, &write_matrix(moved.generators(), Some(s.n())))?;
            }
        }
        Verb::PolyTm { file } => {
            let m = cx.symplectic(&file)?;
            let p = restricted_tutte_martin(&m, cx.cap.unwrap_or(DEFAULT_TERM_CAP)).map_err(Failure::invalid)?;
            poly_report(&mut r, "", &p);
        }
        Verb::PolyInterlace { file } => {
            let p = interlace(&cx.graph(&file)?.graph).map_err(Failure::invalid)?;
            poly_report(&mut r, "", &p);
        }
        Verb::PolyVerify { file } => {
            let cmp = compare_tm_and_interlace(&cx.graph(&file)?.graph).map_err(Failure::invalid)?;
            poly_report(&mut r, "tutte-martin ", &cmp.tutte_martin);
            poly_report(&mut r, "interlace ", &cmp.interlace);
            r.flag("equal", cmp.equal());
        }
        Verb::GraphState { file, save } => {
            let g = cx.graph(&file)?.graph;
            let s = graph_state_stabilizer(&g, cx.graph_field()).map_err(Failure::invalid)?;
            r.text("field", s.field().to_string());
            rows_report(&mut r, &s);
            let m = lagrangian_from_graph(&g, cx.graph_field()).map_err(Failure::invalid)?;
            bases_report(&mut r, &m);
            if let Some(p) = save {
                write(&p, &write_matrix(s.generators(), Some(s.n())))?;
            }
        }
        Verb::Graphical { file, save } => {
            let gf = cx.graph(&file)?;
            let labeling = gf.labeling().map_err(Failure::invalid)?;
            let m = graphical_symplectic_matroid(&gf.graph, &labeling, cx.star_mode).map_err(Failure::invalid)?;
            let expected = expected_graphical_rank(&gf.graph);
            r.text("star-mode", cx.star_mode.to_string());
            r.int("expected-rank", expected);
            r.flag("rank-matches", expected == m.rank());
            bases_report(&mut r, &m);
            let mut starred: Vec<_> = m.bases().iter().map(|b| b.star()).collect();
            starred.sort();
            r.sets("star-basis", &starred);
            save_matroid(&save, &m)?;
        }
        Verb::CodeInfo { file } => {
            let s = cx.stabilizer(&file)?;
            r.text("field", s.field().to_string());
            r.int("n", s.n());
            r.int("generators", s.rows());
            r.int("logical", s.logical_qudits());
            r.flag("homogeneous-form", is_homogeneous_form(&s));
            let d = code_distance(&s, cx.cap.unwrap_or(DEFAULT_ENUMERATION_CAP)).map_err(Failure::invalid)?;
            match d {
                Some(d) => r.int("distance", d),
                None => r.text("distance", "none"),
            }
        }
        Verb::Qss { file, dealer, all_dealers } => {
            let m = cx.symplectic(&file)?;
            if all_dealers {
                let report = secret_sharing_report(&m).map_err(Failure::invalid)?;
                for (i, v) in report.dealers.iter().enumerate() {
                    match v {
                        DealerVerdict::Structure { access, .. } => access_report(&mut r, access),
                        DealerVerdict::Degenerate => {
                            r.int("dealer", i + 1);
                            r.text("verdict", "INVALID (degenerate)");
                        }
                    }
                }
                r.flag("secret-sharing", report.all_valid());
            } else {
                let dealer = dealer.expect("clap requires --dealer without --all-dealers");
                let a = induced_access_structure(&m, dealer).map_err(Failure::invalid)?;
                access_report(&mut r, &a);
            }
        }
        Verb::LiftIsd { file, save } => {
            let om = cx.ordinary(&file)?;
            let l = lift_identically_self_dual(&om).map_err(Failure::invalid)?;
            bases_report(&mut r, &l);
            r.flag("self-dual", l.is_self_dual().map_err(Failure::invalid)?);
            let mut same = true;
            for d in 1..=om.n() as u32 {
                let lifted = induced_access_structure(&l, d).ok();
                let original = ordinary_access_structure(&om, d).ok();
                same &= lifted == original;
            }
            r.flag("same-access-structures", same);
            save_matroid(&save, &l)?;
        }
    }
    Ok(r)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 64 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let field = match cli.field.map(FieldSpec::new).transpose() {
        Ok(f) => f,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(64);
        }
    };
    let cx = Context { field, cap: cli.cap, star_mode: cli.star_mode };
    match run(&cx, cli.verb) {
        Ok(report) => {
            print!("{}", report.render(cli.format));
            ExitCode::SUCCESS
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(65)
        }
        Err(Failure::Validation(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
