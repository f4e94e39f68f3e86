//! Command-line surface for the porism toolkit.
//!
//! Exit codes: 0 on success, 1 on negative mathematical verdicts
//! (infeasible quadruple, invalid gauge) with the report still emitted,
//! 2 on usage or input errors.

mod svg;

use clap::{Args, Parser, Subcommand, ValueEnum};
use porism::fmt::sig17;
use porism::{
    construct_chain, extremal_area, extremal_perimeter, feasibility_test, moments3, moments4,
    moments_numeric, neighbor_curvatures, neighbor_quadratic, poristic_range, sweep, Error,
    ExtremalResult, Gauge, GAUGE_TOL,
};

#[derive(Parser)]
#[command(name = "porism", version, about = "Steiner-chain porism toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
    Csv,
    Svg,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Target {
    Area,
    Perimeter,
}

#[derive(Args)]
struct GaugeArgs {
    /// Outer Soddy radius R
    #[arg(long = "R")]
    outer: f64,
    /// Inner Soddy radius r
    #[arg(long = "r")]
    inner: f64,
    /// Chain length n
    #[arg(long)]
    n: u32,
    /// Center distance d; derived from the Pedoe relation when omitted
    #[arg(long)]
    d: Option<f64>,
}

impl GaugeArgs {
    fn build(&self) -> porism::Result<Gauge> {
        match self.d {
            None => Gauge::new(self.outer, self.inner, self.n),
            Some(d) => Gauge::with_distance(self.outer, self.inner, d, self.n),
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Derive the center distance of a gauge, or validate a given one
    Gauge {
        #[command(flatten)]
        gauge: GaugeArgs,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Invariant moments of the poristic family
    Moments {
        #[command(flatten)]
        gauge: GaugeArgs,
        /// Highest moment order (default n - 1)
        #[arg(long)]
        k: Option<u32>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Poristic radius and bend bounds
    Range {
        #[command(flatten)]
        gauge: GaugeArgs,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Bends of the two neighbors of the circle with radius u
    Neighbors {
        #[command(flatten)]
        gauge: GaugeArgs,
        /// Radius of the anchor circle
        #[arg(long)]
        u: f64,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Feasibility verdict for an ordered radius quadruple
    Feasible {
        /// Four comma-separated radii, e.g. 3,2.4,2,2.4
        #[arg(long)]
        radii: String,
        /// Relative tolerance of the staged checks
        #[arg(long, default_value_t = 1e-6)]
        tol: f64,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Extremal area or perimeter over the poristic family (n = 4)
    Extremal {
        #[command(flatten)]
        gauge: GaugeArgs,
        #[arg(long, value_enum)]
        target: Target,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Construct the chain at a given annulus phase
    Construct {
        #[command(flatten)]
        gauge: GaugeArgs,
        /// Annulus-frame angle of circle 0, radians
        #[arg(long, default_value_t = 0.0)]
        phase: f64,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// CSV table of t, S(t), L(t) over the bend range
    Sweep {
        #[command(flatten)]
        gauge: GaugeArgs,
        /// Number of grid points
        #[arg(long)]
        points: usize,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
}

fn main() {
    std::process::exit(run());
}

fn run() -> i32 {
    let cli = Cli::parse();
    match dispatch(cli.command) {
        Ok(code) => code,
        Err(Error::Input(msg)) => {
            eprintln!("error: {msg}");
            2
        }
        Err(e) => {
            println!("{{\"error\": \"{e}\"}}");
            1
        }
    }
}

fn require_format(format: Format, allowed: &[Format]) -> porism::Result<()> {
    if allowed.contains(&format) {
        Ok(())
    } else {
        Err(Error::Input("unsupported output format for this command".into()))
    }
}

fn dispatch(command: Command) -> porism::Result<i32> {
    match command {
        Command::Gauge { gauge, format } => {
            require_format(format, &[Format::Json, Format::Text])?;
            run_gauge(&gauge, format)
        }
        Command::Moments { gauge, k, format } => {
            require_format(format, &[Format::Json, Format::Text])?;
            run_moments(&gauge.build()?, k, format)
        }
        Command::Range { gauge, format } => {
            require_format(format, &[Format::Json, Format::Text])?;
            run_range(&gauge.build()?, format)
        }
        Command::Neighbors { gauge, u, format } => {
            require_format(format, &[Format::Json, Format::Text])?;
            run_neighbors(&gauge.build()?, u, format)
        }
        Command::Feasible { radii, tol, format } => {
            require_format(format, &[Format::Json, Format::Text])?;
            run_feasible(&radii, tol, format)
        }
        Command::Extremal {
            gauge,
            target,
            format,
        } => {
            require_format(format, &[Format::Json, Format::Text])?;
            run_extremal(&gauge.build()?, target, format)
        }
        Command::Construct {
            gauge,
            phase,
            format,
        } => {
            require_format(format, &[Format::Json, Format::Svg])?;
            run_construct(&gauge.build()?, phase, format)
        }
        Command::Sweep {
            gauge,
            points,
            format,
        } => {
            require_format(format, &[Format::Csv])?;
            run_sweep(&gauge.build()?, points)
        }
    }
}

fn gauge_json(g: &Gauge, valid: bool) -> String {
    format!(
        "{{\"R\": {}, \"r\": {}, \"d\": {}, \"n\": {}, \"q\": {}, \"valid\": {valid}}}",
        sig17(g.outer_radius()),
        sig17(g.inner_radius()),
        sig17(g.center_distance()),
        g.chain_len(),
        sig17(g.q()),
    )
}

fn run_gauge(args: &GaugeArgs, format: Format) -> porism::Result<i32> {
    let (gauge, valid) = match args.d {
        None => (Gauge::new(args.outer, args.inner, args.n)?, true),
        Some(d) => {
            let valid = Gauge::validate(args.outer, args.inner, d, args.n, GAUGE_TOL);
            if valid {
                (Gauge::with_distance(args.outer, args.inner, d, args.n)?, true)
            } else {
                // Emit the verdict for the rejected tuple as-is.
                match format {
                    Format::Text => println!("invalid gauge: d = {} fails the Pedoe relation", sig17(d)),
                    _ => println!(
                        "{{\"R\": {}, \"r\": {}, \"d\": {}, \"n\": {}, \"valid\": false}}",
                        sig17(args.outer),
                        sig17(args.inner),
                        sig17(d),
                        args.n
                    ),
                }
                return Ok(1);
            }
        }
    };
    match format {
        Format::Text => {
            println!("R = {}", sig17(gauge.outer_radius()));
            println!("r = {}", sig17(gauge.inner_radius()));
            println!("d = {}", sig17(gauge.center_distance()));
            println!("n = {}", gauge.chain_len());
        }
        _ => println!("{}", gauge_json(&gauge, valid)),
    }
    Ok(0)
}

fn run_moments(g: &Gauge, k: Option<u32>, format: Format) -> porism::Result<i32> {
    let n = g.chain_len();
    if k == Some(0) {
        return Err(Error::Input("--k must be at least 1".into()));
    }
    let k = k.unwrap_or(n - 1);
    let moments = match (n, k) {
        (3, k) if k <= 2 => {
            let mut m = moments3(g)?;
            m.values.truncate(k as usize);
            m
        }
        (4, k) if k <= 3 => {
            let mut m = moments4(g)?;
            m.values.truncate(k as usize);
            m
        }
        _ => moments_numeric(g, k, 0.0)?,
    };
    match format {
        Format::Text => {
            for (i, v) in moments.values.iter().enumerate() {
                println!("I{} = {}", i + 1, sig17(*v));
            }
        }
        _ => {
            let values: Vec<String> = moments.values.iter().map(|v| sig17(*v)).collect();
            println!(
                "{{\"n\": {}, \"k\": {}, \"values\": [{}]}}",
                n,
                k,
                values.join(", ")
            );
        }
    }
    Ok(0)
}

fn run_range(g: &Gauge, format: Format) -> porism::Result<i32> {
    let range = poristic_range(g);
    match format {
        Format::Text => {
            println!("r_lo = {}", sig17(range.r_lo));
            println!("r_hi = {}", sig17(range.r_hi));
            println!("b_lo = {}", sig17(range.b_lo));
            println!("b_hi = {}", sig17(range.b_hi));
        }
        _ => println!(
            "{{\"r_lo\": {}, \"r_hi\": {}, \"b_lo\": {}, \"b_hi\": {}}}",
            sig17(range.r_lo),
            sig17(range.r_hi),
            sig17(range.b_lo),
            sig17(range.b_hi)
        ),
    }
    Ok(0)
}

fn run_neighbors(g: &Gauge, u: f64, format: Format) -> porism::Result<i32> {
    let quad = neighbor_quadratic(g, u)?;
    let (v_lo, v_hi) = neighbor_curvatures(g, u)?;
    match format {
        Format::Text => {
            println!("u = {}", sig17(u));
            println!("v_minus = {}", sig17(v_lo));
            println!("v_plus = {}", sig17(v_hi));
        }
        _ => println!(
            "{{\"u\": {}, \"alpha\": {}, \"beta\": {}, \"gamma\": {}, \"v_minus\": {}, \"v_plus\": {}}}",
            sig17(u),
            sig17(quad.alpha),
            sig17(quad.beta),
            sig17(quad.gamma),
            sig17(v_lo),
            sig17(v_hi)
        ),
    }
    Ok(0)
}

fn parse_radii(text: &str) -> porism::Result<[f64; 4]> {
    let parts: Vec<&str> = text.split(',').collect();
    if parts.len() != 4 {
        return Err(Error::Input(format!(
            "--radii expects four comma-separated values, got {}",
            parts.len()
        )));
    }
    let mut radii = [0.0; 4];
    for (slot, part) in radii.iter_mut().zip(&parts) {
        *slot = part
            .trim()
            .parse::<f64>()
            .map_err(|_| Error::Input(format!("invalid radius '{part}'")))?;
    }
    Ok(radii)
}

fn run_feasible(radii: &str, tol: f64, format: Format) -> porism::Result<i32> {
    if !tol.is_finite() || tol < 0.0 {
        return Err(Error::Input(format!("--tol must be nonnegative, got {tol}")));
    }
    let radii = parse_radii(radii)?;
    let report = feasibility_test(&radii, tol)?;
    match format {
        Format::Text => {
            for s in &report.stages {
                println!(
                    "{}: {}",
                    s.stage.as_str(),
                    if s.pass { "pass" } else { "fail" }
                );
            }
            println!(
                "verdict: {}",
                if report.verdict { "feasible" } else { "infeasible" }
            );
        }
        _ => println!("{}", report.to_json()),
    }
    Ok(if report.verdict { 0 } else { 1 })
}

fn extremal_json(target: &str, res: &ExtremalResult) -> String {
    let bends = |b: &[f64; 4]| {
        b.iter()
            .map(|x| sig17(*x))
            .collect::<Vec<_>>()
            .join(", ")
    };
    format!(
        "{{\"target\": \"{target}\", \"unit\": \"{}\", \"max\": {}, \"min\": {}, \
         \"argmax\": {{\"kind\": \"{}\", \"bends\": [{}]}}, \
         \"argmin\": {{\"kind\": \"{}\", \"bends\": [{}]}}}}",
        res.unit.as_str(),
        sig17(res.max_value),
        sig17(res.min_value),
        res.argmax.kind.as_str(),
        bends(&res.argmax.bends),
        res.argmin.kind.as_str(),
        bends(&res.argmin.bends),
    )
}

fn run_extremal(g: &Gauge, target: Target, format: Format) -> porism::Result<i32> {
    let (name, label, res) = match target {
        Target::Area => ("area", "A", extremal_area(g)?),
        Target::Perimeter => ("perimeter", "L", extremal_perimeter(g)?),
    };
    match format {
        Format::Text => {
            println!("target: {name} ({})", res.unit.as_str());
            println!(
                "{label}_max {} at the {} chain",
                sig17(res.max_value),
                res.argmax.kind.as_str()
            );
            println!(
                "{label}_min {} at the {} chains",
                sig17(res.min_value),
                res.argmin.kind.as_str()
            );
        }
        _ => println!("{}", extremal_json(name, &res)),
    }
    Ok(0)
}

fn run_construct(g: &Gauge, phase: f64, format: Format) -> porism::Result<i32> {
    let chain = construct_chain(g, phase)?;
    match format {
        Format::Svg => print!("{}", svg::chain_svg(&chain)),
        _ => println!("{}", chain.to_json()),
    }
    Ok(0)
}

fn run_sweep(g: &Gauge, points: usize) -> porism::Result<i32> {
    let rows = sweep(g, points)?;
    let mut out = String::from("t,S,L\n");
    for row in rows {
        out.push_str(&format!(
            "{},{},{}\n",
            sig17(row.t),
            sig17(row.s),
            sig17(row.l)
        ));
    }
    print!("{out}");
    Ok(0)
}
