//! Thin command-line front end: one subcommand per capability, deterministic
//! reports, machine-readable output.
//!
//! Exit codes: 0 success, 1 precondition violation or bad input, 2 a capped
//! search ended non-exhaustive (results are lower bounds, not conclusions).

mod report;

use clap::{Parser, Subcommand};
use morse_scope::centers::{
    cross_ratio_centers, cross_ratio_depth, center_set, center_set_modified, flip_path,
    paulin_cross_ratio, small_cross_ratio_check,
};
use morse_scope::free_group::{BoundaryPoint, FreeGroupModel, ProductModel};
use morse_scope::hhs::{
    fit_distance_formula, hhs_cross_ratio, morse_characterization_check, product_structure,
    thresholded_sum, tree_trivial_structure, Threshold,
};
use morse_scope::metric::{
    gromov_product, slim_delta, triangle_slimness, MetricGraph, SlimSample,
};
use morse_scope::morse::{morse_gauge_estimate, QGrid};
use morse_scope::synthesis::{
    ball_domain, boundary_map_from_endomorphism, induced_boundary_agreement, qi_distortion,
    synthesize_map, Endomorphism,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use report::Report;
use std::error::Error;
use std::io::Write;
use std::path::PathBuf;
use std::process::exit;
use std::sync::Arc;

#[derive(Parser)]
#[command(name = "morse-scope", version, about = "Coarse-geometry toolkit at desk scale")]
struct Cli {
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    cmd: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Slim-triangle constant of a graph, exact or sampled.
    Hyperbolicity {
        /// Graph file: first line "n m", then m lines "u v".
        #[arg(long)]
        graph: PathBuf,
        /// "all" for the exact constant, or "random" for sampled triples.
        #[arg(long, default_value = "all")]
        sample: String,
        #[arg(long, default_value_t = 200)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Geodesic enumeration cap per side.
        #[arg(long, default_value_t = 100_000)]
        cap: usize,
        /// Also report the slimness of one triangle "x,y,z".
        #[arg(long)]
        triangle: Option<String>,
    },
    /// Gromov product (x, y)_p on a graph or a free-group ball.
    Gromov {
        #[arg(long)]
        graph: Option<PathBuf>,
        #[arg(long)]
        x: Option<u32>,
        #[arg(long)]
        y: Option<u32>,
        #[arg(long)]
        p: Option<u32>,
        #[arg(long, default_value_t = 2)]
        rank: u8,
        #[arg(long, default_value_t = 6)]
        radius: u32,
        #[arg(long)]
        x_word: Option<String>,
        #[arg(long)]
        y_word: Option<String>,
        #[arg(long)]
        p_word: Option<String>,
    },
    /// Empirical Morse gauge table of a path, as CSV.
    Morse {
        #[arg(long, default_value_t = 2)]
        rank: u8,
        #[arg(long, default_value_t = 6)]
        radius: u32,
        /// Measure the axis segment from A^h to a^h.
        #[arg(long, default_value_t = 2)]
        segment: u32,
        /// Or: a graph file plus an explicit path "0,1,2".
        #[arg(long)]
        graph: Option<PathBuf>,
        #[arg(long)]
        path: Option<String>,
        /// "default" (λ∈{1,2,3,5} × ε∈{0,1,2,4}) or "zero" (ε = 0 column).
        #[arg(long, default_value = "default")]
        grid: String,
        #[arg(long, default_value_t = 8)]
        maxlen: u32,
        #[arg(long, default_value_t = 1 << 24)]
        budget: u64,
    },
    /// Cross-ratios of four boundary points, as structured text.
    Crossratio {
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
        #[arg(long)]
        c: String,
        #[arg(long)]
        d: String,
        #[arg(long, default_value_t = 0)]
        k: u32,
        #[arg(long)]
        depth: Option<u32>,
        /// Also evaluate the sequence cross-ratio.
        #[arg(long)]
        paulin: bool,
        /// Let sides range over (1, 20·delta) quasi-geodesics.
        #[arg(long)]
        modified: bool,
        #[arg(long, default_value_t = 0)]
        delta: u32,
        #[arg(long, default_value_t = 2)]
        rank: u8,
        #[arg(long, default_value_t = 6)]
        radius: u32,
        #[arg(long, default_value_t = 1 << 22)]
        budget: u64,
        /// Report the small-pairing check at this constant.
        #[arg(long)]
        small_c: Option<u32>,
    },
    /// Small-flip chain between two triples of boundary points.
    Flips {
        /// Comma-separated triple, e.g. "(a),(b),(A)".
        #[arg(long)]
        start: String,
        #[arg(long)]
        end: String,
        #[arg(long, default_value_t = 0)]
        k: u32,
        #[arg(long, default_value_t = 1)]
        c: u32,
        #[arg(long, default_value_t = 2)]
        rank: u8,
        #[arg(long, default_value_t = 8)]
        radius: u32,
    },
    /// Synthesize f_K from an automorphism boundary map; CSV of assignments
    /// plus the distortion fit.
    Synth {
        /// Substitution, e.g. "a=a,b=ab".
        #[arg(long)]
        phi: String,
        #[arg(long)]
        phi_inv: String,
        #[arg(long, default_value_t = 0)]
        k: u32,
        /// Domain radius.
        #[arg(long, default_value_t = 4)]
        radius: u32,
        #[arg(long, default_value_t = 1)]
        depth: u32,
        #[arg(long, default_value_t = 2)]
        rank: u8,
        /// Ball radius of the model (needs ≥ radius + 2 of margin).
        #[arg(long)]
        model_radius: Option<u32>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Cap on distortion sample pairs; beyond it pairs are sampled.
        #[arg(long, default_value_t = 20_000)]
        max_pairs: usize,
    },
    /// Boundary-agreement report for a synthesized map: images along a ray
    /// and per-depth converging-leg counts.
    Agree {
        #[arg(long)]
        phi: String,
        #[arg(long)]
        phi_inv: String,
        #[arg(long, default_value_t = 0)]
        k: u32,
        #[arg(long)]
        q: String,
        #[arg(long, default_value_t = 8)]
        depth: u32,
        #[arg(long, default_value_t = 0)]
        eta: u32,
        #[arg(long, default_value_t = 2)]
        rank: u8,
        #[arg(long)]
        model_radius: Option<u32>,
    },
    /// Projection-structure operations.
    Hhs {
        #[command(subcommand)]
        sub: HhsCmd,
    },
}

#[derive(Subcommand)]
enum HhsCmd {
    /// Fit (A, B) of the thresholded distance formula over random pairs.
    Distfit {
        /// "tree" (one F_2 domain) or "product" (two line factors).
        #[arg(long, default_value = "tree")]
        structure: String,
        #[arg(long, default_value_t = 1)]
        sigma: u32,
        #[arg(long, default_value_t = 4)]
        radius: u32,
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Three-way Morse characterization of a canonical path.
    Morsecheck {
        #[arg(long, default_value = "tree")]
        structure: String,
        #[arg(long, default_value_t = 3)]
        radius: u32,
        #[arg(long, default_value_t = 2)]
        bcut: u32,
        #[arg(long, default_value_t = 2)]
        l: i64,
        #[arg(long, default_value_t = 14)]
        maxlen: u32,
        #[arg(long, default_value_t = 1 << 26)]
        budget: u64,
    },
    /// Cross-ratio comparison chain on the tree-trivial structure.
    Xratio {
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
        #[arg(long)]
        c: String,
        #[arg(long)]
        d: String,
        #[arg(long, default_value_t = 0)]
        k: u32,
        #[arg(long, default_value_t = 4)]
        depth: u32,
        #[arg(long, default_value_t = 6)]
        radius: u32,
    },
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    print!("{e}");
                    exit(0);
                }
                _ => {
                    eprint!("{e}");
                    exit(1);
                }
            }
        }
    };
    match run(cli) {
        Ok(true) => exit(0),
        Ok(false) => exit(2),
        Err(msg) => {
            eprintln!("error: {msg}");
            exit(1);
        }
    }
}

fn sink(out: &Option<PathBuf>) -> Result<Box<dyn Write>, Box<dyn Error>> {
    Ok(match out {
        Some(path) => Box::new(std::fs::File::create(path)?),
        None => Box::new(std::io::stdout().lock()),
    })
}

fn parse_triple(text: &str) -> Result<[BoundaryPoint; 3], Box<dyn Error>> {
    let parts: Vec<&str> = text.split(',').collect();
    if parts.len() != 3 {
        return Err(format!("expected three comma-separated points, got {text:?}").into());
    }
    Ok([
        BoundaryPoint::parse(parts[0])?,
        BoundaryPoint::parse(parts[1])?,
        BoundaryPoint::parse(parts[2])?,
    ])
}

fn run(cli: Cli) -> Result<bool, Box<dyn Error>> {
    let out = sink(&cli.out)?;
    match cli.cmd {
        Command::Hyperbolicity {
            graph,
            sample,
            count,
            seed,
            cap,
            triangle,
        } => {
            let text = std::fs::read_to_string(&graph)?;
            let g = MetricGraph::from_text(&text)?;
            let mut rep = Report::new("hyperbolicity");
            rep.set("graph", graph.display()).set("sample", &sample);
            let mode = match sample.as_str() {
                "all" => SlimSample::All,
                "random" => {
                    rep.seed = Some(seed);
                    SlimSample::Random { count, seed }
                }
                other => return Err(format!("unknown sample mode {other:?}").into()),
            };
            let r = slim_delta(&g, mode, cap)?;
            rep.exhaustive = !r.truncated;
            let mut rows = vec![vec![
                "delta".to_string(),
                r.delta.to_string(),
                format!("{},{},{}", r.witness[0], r.witness[1], r.witness[2]),
            ]];
            if let Some(t) = triangle {
                let ids: Vec<u32> = t
                    .split(',')
                    .map(|s| s.trim().parse())
                    .collect::<Result<_, _>>()?;
                if ids.len() != 3 {
                    return Err("triangle needs three vertex ids".into());
                }
                let s = triangle_slimness(&g, [ids[0], ids[1], ids[2]], cap)?;
                rep.exhaustive &= !s.truncated;
                rows.push(vec![
                    "triangle_slimness".to_string(),
                    s.delta.to_string(),
                    t,
                ]);
            }
            rep.write_csv(out, &["item", "value", "witness"], &rows)?;
            Ok(rep.exhaustive)
        }

        Command::Gromov {
            graph,
            x,
            y,
            p,
            rank,
            radius,
            x_word,
            y_word,
            p_word,
        } => {
            let mut rep = Report::new("gromov");
            let value = if let Some(path) = graph {
                let g = MetricGraph::from_text(&std::fs::read_to_string(&path)?)?;
                let (x, y, p) = (
                    x.ok_or("--x required with --graph")?,
                    y.ok_or("--y required with --graph")?,
                    p.ok_or("--p required with --graph")?,
                );
                rep.set("graph", path.display())
                    .set("x", x)
                    .set("y", y)
                    .set("p", p);
                gromov_product(&g, x, y, p)?
            } else {
                let m = FreeGroupModel::new(rank, radius)?;
                let g = m.graph()?;
                let xw = x_word.ok_or("--x-word required without --graph")?;
                let yw = y_word.ok_or("--y-word required without --graph")?;
                let pw = p_word.unwrap_or_default();
                rep.set("rank", rank)
                    .set("radius", radius)
                    .set("x", &xw)
                    .set("y", &yw)
                    .set("p", &pw);
                gromov_product(g, m.vertex(&xw)?, m.vertex(&yw)?, m.vertex(&pw)?)?
            };
            rep.write_csv(
                out,
                &["item", "value"],
                &[vec!["gromov_product".to_string(), value.to_string()]],
            )?;
            Ok(true)
        }

        Command::Morse {
            rank,
            radius,
            segment,
            graph,
            path,
            grid,
            maxlen,
            budget,
        } => {
            let grid = match grid.as_str() {
                "default" => QGrid::default_grid(),
                "zero" => QGrid::epsilon_zero_column(),
                other => return Err(format!("unknown grid {other:?}").into()),
            };
            let mut rep = Report::new("morse");
            rep.set("grid_cells", grid.cells.len())
                .set("maxlen", maxlen)
                .set("budget", budget);
            let (g, dpath) = if let Some(file) = graph {
                let g = Arc::new(MetricGraph::from_text(&std::fs::read_to_string(&file)?)?);
                let ids: Vec<u32> = path
                    .ok_or("--path required with --graph")?
                    .split(',')
                    .map(|s| s.trim().parse())
                    .collect::<Result<_, _>>()?;
                rep.set("graph", file.display());
                let p = morse_scope::metric::DiscretePath::new(&g, ids)?;
                (g, p)
            } else {
                let m = FreeGroupModel::new(rank, radius)?;
                if segment > radius {
                    return Err("segment exceeds ball radius".into());
                }
                let a = BoundaryPoint::parse("(a)")?;
                let ainv = BoundaryPoint::parse("(A)")?;
                let words = m.boundary_geodesic_words(&ainv, &a, segment)?;
                let p = m.path_to_vertices(&words)?;
                rep.set("rank", rank).set("radius", radius).set("segment", segment);
                (m.graph()?.clone(), p)
            };
            let table = morse_gauge_estimate(&g, &dpath, &grid, maxlen, budget)?;
            rep.exhaustive = table.exhaustive();
            let rows: Vec<Vec<String>> = table
                .entries
                .iter()
                .map(|e| {
                    vec![
                        e.params.lambda().to_string(),
                        e.params.epsilon().to_string(),
                        e.defect.to_string(),
                        e.exhaustive.to_string(),
                        e.witness.to_string(),
                    ]
                })
                .collect();
            rep.write_csv(out, &["lambda", "epsilon", "defect", "exhaustive", "witness"], &rows)?;
            Ok(rep.exhaustive)
        }

        Command::Crossratio {
            a,
            b,
            c,
            d,
            k,
            depth,
            paulin,
            modified,
            delta,
            rank,
            radius,
            budget,
            small_c,
        } => {
            let m = FreeGroupModel::new(rank, radius)?;
            let (pa, pb, pc, pd) = (
                BoundaryPoint::parse(&a)?,
                BoundaryPoint::parse(&b)?,
                BoundaryPoint::parse(&c)?,
                BoundaryPoint::parse(&d)?,
            );
            let auto = cross_ratio_depth([&pa, &pb, &pc, &pd], k)?;
            let n = depth.unwrap_or(auto).max(auto);
            let mut rep = Report::new("crossratio");
            rep.set("a", &pa)
                .set("b", &pb)
                .set("c", &pc)
                .set("d", &pd)
                .set("K", k)
                .set("depth", n)
                .set("modified", modified);

            let (first, second) = if modified {
                let s1 = center_set_modified(&m, &pa, &pb, &pc, k, n, delta, budget)?;
                let s2 = center_set_modified(&m, &pa, &pd, &pc, k, n, delta, budget)?;
                rep.exhaustive = s1.exhaustive && s2.exhaustive;
                (s1, s2)
            } else {
                (
                    center_set(&m, &pa, &pb, &pc, k, n)?,
                    center_set(&m, &pa, &pd, &pc, k, n)?,
                )
            };
            let mut union = first.points.clone();
            union.extend(second.points.iter().cloned());
            let value = {
                let mut v = 0;
                for (i, x) in union.iter().enumerate() {
                    for y in &union[i + 1..] {
                        v = v.max(m.dist_words(x, y));
                    }
                }
                v
            };

            let mut results = serde_json::json!({
                "cross_ratio": value,
                "center_set_abc": first.points,
                "center_set_adc": second.points,
                "depth": n,
            });
            if paulin {
                let pv = paulin_cross_ratio(&m, &pa, &pb, &pc, &pd)?;
                results["paulin"] = serde_json::json!(pv.to_string());
                results["paulin_abs_matches"] =
                    serde_json::json!(pv.abs() == morse_scope::half::Half::from(value));
            }
            if let Some(cthr) = small_c {
                let check = small_cross_ratio_check(&m, &pa, &pb, &pc, &pd, k, n, cthr)?;
                results["small_pairing"] = serde_json::json!({
                    "values": check.values,
                    "pairing": check.small,
                    "threshold": cthr,
                });
            }
            rep.write_json(out, results)?;
            Ok(rep.exhaustive)
        }

        Command::Flips {
            start,
            end,
            k,
            c,
            rank,
            radius,
        } => {
            let m = FreeGroupModel::new(rank, radius)?;
            let vs = parse_triple(&start)?;
            let ve = parse_triple(&end)?;
            let mut rep = Report::new("flips");
            rep.set("start", &start)
                .set("end", &end)
                .set("K", k)
                .set("C", c);
            let seq = flip_path(&m, &vs, &ve, k, c)?;
            let triples: Vec<String> = seq
                .triples
                .iter()
                .map(|t| format!("{},{},{}", t[0], t[1], t[2]))
                .collect();
            let steps: Vec<serde_json::Value> = seq
                .steps
                .iter()
                .map(|s| {
                    serde_json::json!({
                        "value": s.value,
                        "kind": format!("{:?}", s.kind),
                    })
                })
                .collect();
            let results = serde_json::json!({
                "triples": triples,
                "steps": steps,
                "case": format!("{:?}", seq.case),
                "start_permutation": seq.start_permutation,
            });
            rep.write_json(out, results)?;
            Ok(true)
        }

        Command::Synth {
            phi,
            phi_inv,
            k,
            radius,
            depth,
            rank,
            model_radius,
            seed,
            max_pairs,
        } => {
            let model_radius = model_radius.unwrap_or(radius + 2).max(radius + 2);
            let m = FreeGroupModel::new(rank, model_radius)?;
            let h = boundary_map_from_endomorphism(
                Endomorphism::parse(&phi)?,
                Endomorphism::parse(&phi_inv)?,
            )?;
            let domain = ball_domain(&m, radius);
            let f = synthesize_map(&m, &h, k, &domain, depth)?;

            let mut rep = Report::new("synth");
            rep.set("phi", &phi)
                .set("phi_inv", &phi_inv)
                .set("K", k)
                .set("radius", radius)
                .set("model_radius", model_radius);
            rep.seed = Some(seed);

            // Distortion samples: all pairs if small, else a seeded sample.
            let mut pairs: Vec<(String, String)> = Vec::new();
            let total = domain.len() * (domain.len() - 1) / 2;
            if total <= max_pairs {
                for (i, x) in domain.iter().enumerate() {
                    for y in &domain[i + 1..] {
                        pairs.push((x.clone(), y.clone()));
                    }
                }
            } else {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                for _ in 0..max_pairs {
                    let x = &domain[rng.random_range(0..domain.len())];
                    let y = &domain[rng.random_range(0..domain.len())];
                    pairs.push((x.clone(), y.clone()));
                }
            }
            let value = |x: &str| f.value(x).unwrap_or_default().to_string();
            let samples: Vec<((String, String), (String, String))> = pairs
                .iter()
                .map(|(x, y)| ((x.clone(), y.clone()), (value(x), value(y))))
                .collect();
            let fit = qi_distortion(&samples);

            let mut rows: Vec<Vec<String>> = vec![vec![
                "fit".to_string(),
                String::new(),
                String::new(),
                fit.lambda.to_string(),
                fit.epsilon.to_string(),
            ]];
            rows.push(vec![
                "assignment".to_string(),
                String::new(),
                String::new(),
                String::new(),
                String::new(),
            ]);
            rows.pop();
            for a in &f.assignments {
                rows.push(vec![
                    "assignment".to_string(),
                    a.x.clone(),
                    a.fx.clone(),
                    String::new(),
                    String::new(),
                ]);
            }
            rep.write_csv(out, &["kind", "x", "fx", "lambda", "epsilon"], &rows)?;
            Ok(true)
        }

        Command::Agree {
            phi,
            phi_inv,
            k,
            q,
            depth,
            eta,
            rank,
            model_radius,
        } => {
            let model_radius = model_radius.unwrap_or(depth + 2).max(depth + 2);
            let m = FreeGroupModel::new(rank, model_radius)?;
            let h = boundary_map_from_endomorphism(
                Endomorphism::parse(&phi)?,
                Endomorphism::parse(&phi_inv)?,
            )?;
            let point = BoundaryPoint::parse(&q)?;
            let r = induced_boundary_agreement(&m, &h, k, &point, depth, eta)?;
            let mut rep = Report::new("agree");
            rep.set("phi", &phi)
                .set("q", &point)
                .set("depth", depth)
                .set("eta", eta)
                .set("agreement_depth", r.agreement_depth);
            let rows: Vec<Vec<String>> = r
                .claim_counts
                .iter()
                .map(|c| vec![c.depth.to_string(), c.converging_legs.to_string()])
                .collect();
            rep.write_csv(out, &["depth", "converging_legs"], &rows)?;
            Ok(true)
        }

        Command::Hhs { sub } => run_hhs(sub, out),
    }
}

fn line_product(radius: u32) -> Result<ProductModel, Box<dyn Error>> {
    let l = Arc::new(FreeGroupModel::new(1, radius)?);
    let r = Arc::new(FreeGroupModel::new(1, radius)?);
    Ok(ProductModel::new(l, r, 1 << 16)?)
}

fn run_hhs(cmd: HhsCmd, out: Box<dyn Write>) -> Result<bool, Box<dyn Error>> {
    match cmd {
        HhsCmd::Distfit {
            structure,
            sigma,
            radius,
            samples,
            seed,
        } => {
            let mut rep = Report::new("hhs distfit");
            rep.set("structure", &structure)
                .set("sigma", sigma)
                .set("radius", radius)
                .set("samples", samples);
            rep.seed = Some(seed);
            let sig = Threshold::new(sigma)?;
            let (s, _keepalive): (morse_scope::hhs::HhsStructure, Option<ProductModel>) =
                match structure.as_str() {
                    "tree" => {
                        let m = FreeGroupModel::new(2, radius)?;
                        (tree_trivial_structure(&m)?, None)
                    }
                    "product" => {
                        let p = line_product(radius)?;
                        let s = product_structure(&p)?;
                        (s, Some(p))
                    }
                    other => return Err(format!("unknown structure {other:?}").into()),
                };
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let n = s.base.vertex_count() as u32;
            let pairs: Vec<(u32, u32)> = (0..samples)
                .map(|_| (rng.random_range(0..n), rng.random_range(0..n)))
                .collect();
            let fit = fit_distance_formula(&s, sig, &pairs);
            let worst = fit
                .worst
                .map(|(x, y)| format!("{x},{y}"))
                .unwrap_or_default();
            // Per-domain contributions for the first sampled pair.
            let mut rows = vec![vec![
                "fit".to_string(),
                fit.a.to_string(),
                fit.b.to_string(),
                worst,
            ]];
            if let Some(&(x, y)) = pairs.first() {
                for d in &s.domains {
                    rows.push(vec![
                        format!("domain:{}", d.name),
                        sig.cut(d.dist(x, y)).to_string(),
                        String::new(),
                        format!("{x},{y}"),
                    ]);
                }
                rows.push(vec![
                    "sum".to_string(),
                    thresholded_sum(&s, x, y, sig).to_string(),
                    s.base.dist(x, y).to_string(),
                    format!("{x},{y}"),
                ]);
            }
            rep.write_csv(out, &["item", "a_or_value", "b_or_dist", "pair"], &rows)?;
            Ok(true)
        }

        HhsCmd::Morsecheck {
            structure,
            radius,
            bcut,
            l,
            maxlen,
            budget,
        } => {
            let mut rep = Report::new("hhs morsecheck");
            rep.set("structure", &structure)
                .set("radius", radius)
                .set("bcut", bcut)
                .set("l", l)
                .set("maxlen", maxlen);
            let grid = QGrid::epsilon_zero_column();
            let report = match structure.as_str() {
                "tree" => {
                    let m = FreeGroupModel::new(2, radius)?;
                    let s = tree_trivial_structure(&m)?;
                    let a = BoundaryPoint::parse("(a)")?;
                    let ainv = BoundaryPoint::parse("(A)")?;
                    let seg = radius.saturating_sub(1).max(1);
                    let words = m.boundary_geodesic_words(&ainv, &a, seg)?;
                    let path = m.path_to_vertices(&words)?;
                    morse_characterization_check(&s, &path, &grid, bcut, l, maxlen, budget)?
                }
                "product" => {
                    let p = line_product(radius)?;
                    let s = product_structure(&p)?;
                    let path = p.horizontal_axis()?;
                    morse_characterization_check(&s, &path, &grid, bcut, l, maxlen, budget)?
                }
                other => return Err(format!("unknown structure {other:?}").into()),
            };
            rep.exhaustive = report.defect_table.exhaustive();
            let mut rows = vec![
                vec!["morse_by_defect".to_string(), report.morse_by_defect.to_string()],
                vec![
                    "bounded_projections".to_string(),
                    report.bounded_projections.to_string(),
                ],
                vec![
                    "maximal_quasi_geodesic".to_string(),
                    report.maximal_quasi_geodesic.to_string(),
                ],
                vec!["agree".to_string(), report.agree.to_string()],
                vec!["inconclusive".to_string(), report.inconclusive.to_string()],
            ];
            for (name, diam) in &report.projection_diameters {
                rows.push(vec![format!("projection_diam:{name}"), diam.to_string()]);
            }
            for e in &report.defect_table.entries {
                rows.push(vec![
                    format!("defect:({},{})", e.params.lambda(), e.params.epsilon()),
                    e.defect.to_string(),
                ]);
            }
            rep.write_csv(out, &["item", "value"], &rows)?;
            Ok(rep.exhaustive)
        }

        HhsCmd::Xratio {
            a,
            b,
            c,
            d,
            k,
            depth,
            radius,
        } => {
            let m = FreeGroupModel::new(2, radius)?;
            let s = tree_trivial_structure(&m)?;
            let (pa, pb, pc, pd) = (
                BoundaryPoint::parse(&a)?,
                BoundaryPoint::parse(&b)?,
                BoundaryPoint::parse(&c)?,
                BoundaryPoint::parse(&d)?,
            );
            let r = hhs_cross_ratio(&m, &s, &pa, &pb, &pc, &pd, k, depth)?;
            let mut rep = Report::new("hhs xratio");
            rep.set("a", &pa)
                .set("b", &pb)
                .set("c", &pc)
                .set("d", &pd)
                .set("K", k);
            let gaps = r.gaps();
            let rows = vec![vec![
                r.base_value.to_string(),
                r.center_distance.to_string(),
                r.maximal_value.to_string(),
                gaps[2].to_string(),
                r.x1.clone(),
                r.x2.clone(),
            ]];
            rep.write_csv(
                out,
                &[
                    "base_value",
                    "center_distance",
                    "maximal_value",
                    "gap_base_vs_maximal",
                    "x1",
                    "x2",
                ],
                &rows,
            )?;
            Ok(true)
        }
    }
}
