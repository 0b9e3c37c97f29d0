//! Command-line front end: reads graphs in the `V <n>` / `<u> <v>` text
//! format and prints expansions and verification verdicts.
//!
//! Exit status: 0 on success, 1 when a verification fails, 2 on bad input.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use tutte_activities::bernardi::{bernardi_expansion, CombinatorialMap};
use tutte_activities::complexes::{independence_complex, nbc_complex, SimplicialComplex};
use tutte_activities::corpus::{connected_multigraphs, is_simple};
use tutte_activities::decision::{gm_expansion, ConstantOrder, DecisionTree, SeededChooser};
use tutte_activities::dfs::{dfs_expansion, VertexOrder};
use tutte_activities::forest::tutte_forest_expansion;
use tutte_activities::graph::parse_graphs;
use tutte_activities::orientation::{flip_reference, orientation_expansion_4var};
use tutte_activities::poly::MultiPoly;
use tutte_activities::structure::{
    activity_bipartition, convolution_sum, external_order, ext_int_order, internal_order, Poset,
};
use tutte_activities::subgraph::{crapo_intervals, crapo_verify, gt_expansion};
use tutte_activities::tutte::{shift_to_four_variables, specialize, tutte_delcon, tutte_whitney};
use tutte_activities::verify::{all_passed, verify_all, VerifyOptions};
use tutte_activities::{EdgeSubset, Error, Graph, Var};

#[derive(Parser)]
#[command(name = "tutte", version, about = "Activity expansions of the Tutte polynomial")]
struct Cli {
    /// Emit one JSON object per input graph instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Vertex order for DFS activity, smallest first, e.g. `2,0,1`.
    #[arg(long, global = true, value_name = "LIST")]
    vertex_order: Option<String>,
    /// Rotation-system file for Bernardi activity.
    #[arg(long, global = true, value_name = "FILE")]
    rotation: Option<PathBuf>,
    /// Seed for a random decision tree (default: edges in list order).
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Edges whose reference direction is reversed, e.g. `0,3`.
    #[arg(long, global = true, value_name = "LIST")]
    flip: Option<String>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Tutte polynomial by the chosen method.
    Tutte {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "whitney")]
        method: Method,
    },
    /// Interval decomposition of the subsets by spanning forests.
    Crapo { file: PathBuf },
    /// The cyclic flat splitting each spanning forest.
    Bipartition { file: PathBuf },
    /// Sum over cyclic flats against the Tutte polynomial.
    Convolution { file: PathBuf },
    /// Cover relations of the active orders and lattice verdicts.
    Orders { file: PathBuf },
    /// Independence and no-broken-circuit complexes.
    Complexes { file: PathBuf },
    /// Every expansion and identity; exits 1 on any mismatch.
    VerifyAll { file: PathBuf },
    /// Connected multigraphs up to isomorphism, loops allowed.
    Corpus {
        #[arg(long, default_value_t = 4)]
        max_vertices: usize,
        #[arg(long, default_value_t = 6)]
        max_edges: usize,
        /// Only graphs without loops or parallel edges.
        #[arg(long)]
        simple: bool,
    },
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Method {
    Whitney,
    Delcon,
    Forest,
    Gt,
    Dfs,
    Bernardi,
    Decision,
    Orientation,
}

enum Failure {
    Input(String),
    Verification(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::TheoremViolation(_) => Failure::Verification(e.to_string()),
            _ => Failure::Input(e.to_string()),
        }
    }
}

/// Text and JSON renderings of one result, plus whether its checks held.
struct Output {
    text: String,
    json: Value,
    ok: bool,
}

fn list(arg: &str) -> Result<Vec<usize>, Failure> {
    arg.split(',')
        .map(|t| {
            t.trim()
                .parse()
                .map_err(|_| Failure::Input(format!("bad list entry {t:?} in {arg:?}")))
        })
        .collect()
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn load(path: &Path) -> Result<Vec<Graph>, Failure> {
    parse_graphs(&read(path)?).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn set_json(s: EdgeSubset) -> Value {
    json!(s.iter().collect::<Vec<_>>())
}

fn verdict(ok: bool) -> &'static str {
    if ok {
        "OK"
    } else {
        "MISMATCH"
    }
}

impl Cli {
    fn vertex_order(&self, g: &Graph) -> Result<VertexOrder, Failure> {
        match &self.vertex_order {
            Some(s) => Ok(VertexOrder::from_sequence(&list(s)?)?),
            None => Ok(VertexOrder::identity(g.vertex_count())),
        }
    }

    fn map(&self, g: &Graph) -> Result<CombinatorialMap, Failure> {
        match &self.rotation {
            Some(path) => Ok(CombinatorialMap::parse(g, &read(path)?)?),
            None => Ok(CombinatorialMap::default_for(g)?),
        }
    }

    fn flipped(&self, g: &Graph) -> Result<Graph, Failure> {
        match &self.flip {
            Some(s) => Ok(flip_reference(g, list(s)?.into_iter().collect())?),
            None => Ok(g.clone()),
        }
    }

    fn decision_tree(&self, m: usize) -> Box<dyn DecisionTree> {
        match self.seed {
            Some(seed) => Box::new(SeededChooser { seed, edge_count: m }),
            None => Box::new(ConstantOrder::increasing(m)),
        }
    }
}

fn tutte(cli: &Cli, g: &Graph, method: Method) -> Result<Output, Failure> {
    let four = |p: MultiPoly| -> Result<Output, Failure> {
        let ok = p == shift_to_four_variables(&tutte_whitney(g)?);
        Ok(Output {
            text: format!("{p}\nT(x+w, y+z) check: {}\n", verdict(ok)),
            json: json!({"polynomial": p.to_json(), "text": p.to_string(), "check": ok}),
            ok,
        })
    };
    let p = match method {
        Method::Whitney => tutte_whitney(g)?,
        Method::Delcon => tutte_delcon(g),
        Method::Forest => tutte_forest_expansion(g)?,
        Method::Dfs => dfs_expansion(g, &cli.vertex_order(g)?)?,
        Method::Bernardi => bernardi_expansion(&cli.map(g)?)?,
        Method::Gt => return four(gt_expansion(g)?),
        Method::Decision => return four(gm_expansion(g, cli.decision_tree(g.edge_count()).as_ref())?),
        Method::Orientation => return four(orientation_expansion_4var(&cli.flipped(g)?)?),
    };
    Ok(Output {
        text: format!("{p}\n"),
        json: json!({"polynomial": p.to_json(), "text": p.to_string()}),
        ok: true,
    })
}

fn crapo(g: &Graph) -> Result<Output, Failure> {
    let intervals = crapo_intervals(g)?;
    let ok = crapo_verify(g)?;
    let mut text = String::new();
    for i in &intervals {
        text += &format!("[{}, {}] forest {} size {}\n", i.lower, i.upper, i.forest, i.size());
    }
    text += if ok { "PARTITION OK\n" } else { "PARTITION FAILED\n" };
    Ok(Output {
        text,
        json: json!({"intervals": intervals, "partition": ok}),
        ok,
    })
}

fn bipartition(g: &Graph) -> Result<Output, Failure> {
    let mut text = String::new();
    let mut rows = Vec::new();
    for f in g.maximal_spanning_forests() {
        let flat = activity_bipartition(g, f)?;
        text += &format!("{f} -> {flat}\n");
        rows.push(json!({"forest": set_json(f), "cyclic_flat": set_json(flat)}));
    }
    Ok(Output {
        text,
        json: json!({"forests": rows}),
        ok: true,
    })
}

fn convolution(g: &Graph) -> Result<Output, Failure> {
    let sum = convolution_sum(g)?;
    let ok = sum == tutte_whitney(g)?;
    Ok(Output {
        text: format!("{sum}\nCONVOLUTION {}\n", verdict(ok)),
        json: json!({"sum": sum.to_string(), "identity": ok}),
        ok,
    })
}

fn orders(g: &Graph) -> Result<Output, Failure> {
    let posets: [(&str, Poset); 3] = [
        ("external_with_bottom", external_order(g)?.with_bottom()),
        ("internal_with_top", internal_order(g)?.with_top()),
        ("mixed", ext_int_order(g)?),
    ];
    let mut text = String::new();
    let mut obj = serde_json::Map::new();
    let mut ok = true;
    for (name, p) in &posets {
        let lattice = p.is_lattice();
        ok &= lattice;
        text += &p.to_dot(name);
        text += &format!("// {name} lattice: {}\n", if lattice { "yes" } else { "no" });
        let covers: Vec<Value> = p
            .covers()
            .into_iter()
            .map(|(a, b)| json!([p.elements()[a].to_string(), p.elements()[b].to_string()]))
            .collect();
        obj.insert(name.to_string(), json!({"covers": covers, "lattice": lattice}));
    }
    Ok(Output {
        text,
        json: Value::Object(obj),
        ok,
    })
}

fn complex_json(c: &SimplicialComplex) -> Value {
    json!({
        "facets": c.facets.iter().map(|&f| set_json(f)).collect::<Vec<_>>(),
        "f_vector": c.f_vector(),
        "f_polynomial": c.f_polynomial().to_string(),
        "h_polynomial": c.h_polynomial().to_string(),
    })
}

fn complexes(g: &Graph) -> Result<Output, Failure> {
    let t = tutte_whitney(g)?;
    let x = [Var::X];
    let ind = independence_complex(g)?;
    let in_ok = ind.h_polynomial() == specialize(&t, Var::Y, 1).with_vars(&x);
    let facets = |c: &SimplicialComplex| {
        c.facets.iter().map(|f| f.to_string()).collect::<Vec<_>>().join(" ")
    };
    let mut text = format!(
        "IN facets: {}\nIN f-vector: {:?}\nIN h: {}\nh(IN) = T(x,1): {}\n",
        facets(&ind),
        ind.f_vector(),
        ind.h_polynomial(),
        verdict(in_ok)
    );
    let mut obj = json!({"independence": complex_json(&ind), "in_identity": in_ok});
    let mut ok = in_ok;
    if g.has_loops() {
        text += "NBC: skipped, graph has loops\n";
    } else {
        let nbc = nbc_complex(g)?;
        let nbc_ok = nbc.h_polynomial() == specialize(&t, Var::Y, 0).with_vars(&x);
        ok &= nbc_ok;
        text += &format!(
            "NBC facets: {}\nNBC f-vector: {:?}\nNBC h: {}\nh(NBC) = T(x,0): {}\n",
            facets(&nbc),
            nbc.f_vector(),
            nbc.h_polynomial(),
            verdict(nbc_ok)
        );
        obj["nbc"] = complex_json(&nbc);
        obj["nbc_identity"] = json!(nbc_ok);
    }
    Ok(Output { text, json: obj, ok })
}

fn verify(cli: &Cli, g: &Graph) -> Result<Output, Failure> {
    let options = VerifyOptions {
        vertex_order: cli.vertex_order.as_ref().map(|_| cli.vertex_order(g)).transpose()?,
        map: cli.rotation.as_ref().map(|_| cli.map(g)).transpose()?,
        seed: cli.seed.unwrap_or(0),
    };
    let checks = verify_all(g, &options)?;
    let ok = all_passed(&checks);
    let mut text: String = checks.iter().map(|c| format!("{c}\n")).collect();
    text += if ok { "ALL OK\n" } else { "VERIFICATION FAILED\n" };
    Ok(Output {
        text,
        json: json!({"checks": checks, "ok": ok}),
        ok,
    })
}

fn emit(cli: &Cli, outputs: &[Output]) -> bool {
    let many = outputs.len() > 1;
    for (i, out) in outputs.iter().enumerate() {
        if cli.json {
            println!("{}", out.json);
        } else {
            if many {
                println!("# graph {i}");
            }
            print!("{}", out.text);
        }
    }
    outputs.iter().all(|o| o.ok)
}

type Step<'a> = Box<dyn Fn(&Graph) -> Result<Output, Failure> + 'a>;

fn run(cli: &Cli) -> Result<bool, Failure> {
    let (file, step): (&Path, Step) = match &cli.command {
        Command::Tutte { file, method } => (file, Box::new(move |g| tutte(cli, g, *method))),
        Command::Crapo { file } => (file, Box::new(crapo)),
        Command::Bipartition { file } => (file, Box::new(bipartition)),
        Command::Convolution { file } => (file, Box::new(convolution)),
        Command::Orders { file } => (file, Box::new(orders)),
        Command::Complexes { file } => (file, Box::new(complexes)),
        Command::VerifyAll { file } => (file, Box::new(move |g| verify(cli, g))),
        Command::Corpus {
            max_vertices,
            max_edges,
            simple,
        } => {
            for g in connected_multigraphs(*max_vertices, *max_edges) {
                if *simple && !is_simple(&g) {
                    continue;
                }
                if cli.json {
                    println!("{}", json!({"vertices": g.vertex_count(), "edges": g.edges()}));
                } else {
                    println!("{g}");
                }
            }
            return Ok(true);
        }
    };
    let outputs = load(file)?
        .iter()
        .map(step.as_ref())
        .collect::<Result<Vec<_>, _>>()?;
    Ok(emit(cli, &outputs))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Verification(msg)) => {
            eprintln!("verification failed: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
