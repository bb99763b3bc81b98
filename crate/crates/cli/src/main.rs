//! Command-line front end: builds AR quivers for any orientation of the
//! type-A diagram and prints the combinatorial and spectral data the
//! library derives from them.
//!
//! Exit codes: 0 on success, 1 when `verify` finds a counterexample, 2 on
//! usage errors.

use clap::{Args, Parser, Subcommand, ValueEnum};

use arq::arquiver::{build_coxeter, pairs_of, serialize, ARQuiver, ArFormat, RaySide};
use arq::duality::{build_qj, denominator_zeros, dorey_untwisted, is_type_a_graph, AffineKind};
use arq::oracle::verify_suite;
use arq::orders::{minimal_pairs, order_from_word, reading, ConvexTotalOrder, ReadingStyle};
use arq::rootsys::{parse_quiver, DynkinQuiverA, Segment};

#[derive(Parser)]
#[command(name = "arq", version, about = "Auslander-Reiten quiver combinatorics for type A")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct QuiverArgs {
    /// Rank of the diagram (number of vertices).
    #[arg(long)]
    n: usize,
    /// Orientation as n-1 edge characters, e.g. "><>>"; `R`/`L` work as
    /// aliases for `>`/`<`.
    #[arg(long, default_value = "")]
    orient: String,
    /// Height assigned to the first vertex.
    #[arg(long, default_value_t = 0)]
    xi1: i64,
}

impl QuiverArgs {
    fn build(&self) -> DynkinQuiverA {
        let normalized: String = self
            .orient
            .chars()
            .map(|c| match c {
                'R' | 'r' => '>',
                'L' | 'l' => '<',
                other => other,
            })
            .collect();
        match parse_quiver(self.n, &normalized, self.xi1) {
            Ok(q) => q,
            Err(e) => fail(&e.to_string()),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Reading {
    L,
    U,
}

impl From<Reading> for ReadingStyle {
    fn from(r: Reading) -> Self {
        match r {
            Reading::L => ReadingStyle::L,
            Reading::U => ReadingStyle::U,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Kind {
    A1,
    A2,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Ascii,
    Dot,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Render the AR quiver as an ascii grid, DOT graph, or JSON document.
    Gamma {
        #[command(flatten)]
        quiver: QuiverArgs,
        #[arg(long, value_enum, default_value_t = Format::Ascii)]
        format: Format,
    },
    /// Emit an adapted reduced word by reading the quiver.
    Word {
        #[command(flatten)]
        quiver: QuiverArgs,
        #[arg(long, value_enum, default_value_t = Reading::L)]
        reading: Reading,
        /// Also list the induced total order on the positive roots.
        #[arg(long)]
        roots: bool,
    },
    /// List the ray decompositions of a root with minimality marks.
    Pairs {
        #[command(flatten)]
        quiver: QuiverArgs,
        /// The root to decompose, as "a,b" or a single letter "a".
        #[arg(long, value_parser = parse_segment)]
        gamma: Segment,
        /// Mark minimality against this reading only (default: both).
        #[arg(long, value_enum)]
        order: Option<Reading>,
    },
    /// List the denominator zeros between two fundamental modules.
    Denom {
        #[arg(long, value_enum)]
        kind: Kind,
        /// Rank of the (possibly folded) diagram.
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        l: usize,
    },
    /// Decide whether three labelled nodes "node,exponent" couple.
    Dorey {
        #[arg(long)]
        n: usize,
        #[arg(long, value_parser = parse_node_param)]
        beta: (usize, i64),
        #[arg(long, value_parser = parse_node_param)]
        alpha: (usize, i64),
        #[arg(long, value_parser = parse_node_param)]
        gamma: (usize, i64),
    },
    /// Print the duality datum of the simple roots and its Cartan matrix.
    Qj {
        #[command(flatten)]
        quiver: QuiverArgs,
        /// Label through the twisted folding instead.
        #[arg(long)]
        twisted: bool,
    },
    /// Cross-validate the library over every orientation up to a rank.
    Verify {
        #[arg(long, default_value_t = 6)]
        max_n: usize,
        /// Emit the report as JSON instead of text.
        #[arg(long)]
        json: bool,
    },
}

fn fail(msg: &str) -> ! {
    eprintln!("error: {msg}");
    std::process::exit(2);
}

fn parse_segment(text: &str) -> Result<Segment, String> {
    let nums: Vec<&str> = text.split(',').collect();
    let parse = |s: &str| s.trim().parse::<usize>().map_err(|_| format!("bad number {s:?}"));
    let (a, b) = match nums.as_slice() {
        [a] => (parse(a)?, parse(a)?),
        [a, b] => (parse(a)?, parse(b)?),
        _ => return Err("expected \"a\" or \"a,b\"".to_string()),
    };
    if a < 1 || b < a {
        return Err(format!("[{a},{b}] is not a segment"));
    }
    Ok(Segment::new(a, b))
}

fn parse_node_param(text: &str) -> Result<(usize, i64), String> {
    let nums: Vec<&str> = text.split(',').collect();
    match nums.as_slice() {
        [k, p] => {
            let k = k.trim().parse::<usize>().map_err(|_| format!("bad node {k:?}"))?;
            let p = p.trim().parse::<i64>().map_err(|_| format!("bad exponent {p:?}"))?;
            Ok((k, p))
        }
        _ => Err("expected \"node,exponent\"".to_string()),
    }
}

fn side_name(s: RaySide) -> &'static str {
    match s {
        RaySide::Upper => "upper",
        RaySide::Lower => "lower",
    }
}

fn reading_order(ar: &ARQuiver, style: ReadingStyle) -> ConvexTotalOrder {
    order_from_word(&reading(ar, style)).expect("readings are reduced")
}

fn is_minimal(o: &ConvexTotalOrder, gamma: Segment, alpha: Segment, beta: Segment) -> bool {
    let unordered = |a: Segment, b: Segment| if a < b { (a, b) } else { (b, a) };
    minimal_pairs(o, gamma).into_iter().any(|(x, y)| unordered(x, y) == unordered(alpha, beta))
}

fn main() {
    // Die silently when the consumer of a pipe closes it early, as grep
    // and cat do, instead of panicking on the failed write.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    match Cli::parse().command {
        Command::Gamma { quiver, format } => {
            let ar = build_coxeter(&quiver.build());
            let fmt = match format {
                Format::Ascii => ArFormat::Ascii,
                Format::Dot => ArFormat::Dot,
                Format::Json => ArFormat::Json,
            };
            let out = serialize(&ar, fmt);
            print!("{out}");
            if !out.ends_with('\n') {
                println!();
            }
        }
        Command::Word { quiver, reading: style, roots } => {
            let ar = build_coxeter(&quiver.build());
            let w = reading(&ar, style.into());
            println!("{}", w.to_comma_string());
            if roots {
                let o = order_from_word(&w).expect("readings are reduced");
                for (z, r) in o.roots().iter().enumerate() {
                    println!("{}\t{r}", z + 1);
                }
            }
        }
        Command::Pairs { quiver, gamma, order } => {
            let q = quiver.build();
            if !gamma.fits(q.n()) {
                fail(&format!("{gamma} is not a root of rank {}", q.n()));
            }
            let ar = build_coxeter(&q);
            let pairs = match pairs_of(&ar, gamma) {
                Ok(p) => p,
                Err(e) => fail(&e.to_string()),
            };
            let styles: Vec<ReadingStyle> = match order {
                Some(r) => vec![r.into()],
                None => vec![ReadingStyle::L, ReadingStyle::U],
            };
            let orders: Vec<(ReadingStyle, ConvexTotalOrder)> =
                styles.into_iter().map(|s| (s, reading_order(&ar, s))).collect();
            for p in pairs {
                let marks: Vec<String> = orders
                    .iter()
                    .filter(|(_, o)| is_minimal(o, gamma, p.alpha, p.beta))
                    .map(|(s, _)| format!("{s:?}"))
                    .collect();
                let mark = if marks.is_empty() { "-".to_string() } else { marks.join(",") };
                println!("{} + {}\t{}\tminimal-in={mark}", p.beta, p.alpha, side_name(p.side));
            }
        }
        Command::Denom { kind, n, k, l } => {
            if n < 1 {
                fail("rank must be at least 1");
            }
            let kind = match kind {
                Kind::A1 => AffineKind::A1(n),
                Kind::A2 => AffineKind::A2(n),
            };
            let top = kind.node_range();
            for node in [k, l] {
                if !(1..=top).contains(&node) {
                    fail(&format!("node {node} out of range 1..={top} for {kind}"));
                }
            }
            let zeros: Vec<String> =
                denominator_zeros(kind, k, l).into_iter().map(|z| z.to_string()).collect();
            println!("{}", zeros.join(", "));
        }
        Command::Dorey { n, beta, alpha, gamma } => {
            for (node, _) in [beta, alpha, gamma] {
                if !(1..=n).contains(&node) {
                    fail(&format!("node {node} out of range 1..={n}"));
                }
            }
            println!("{}", dorey_untwisted(n, beta, alpha, gamma));
        }
        Command::Qj { quiver, twisted } => {
            let ar = build_coxeter(&quiver.build());
            let datum = build_qj(&ar, twisted);
            println!("kind: {}", datum.kind);
            for (idx, label) in datum.labels.iter().enumerate() {
                println!("alpha_{}: {label}", idx + 1);
            }
            println!("cartan:");
            for row in &datum.cartan {
                println!("{}", row.iter().map(i64::to_string).collect::<Vec<_>>().join(" "));
            }
            println!("type_a_path: {}", is_type_a_graph(&datum.cartan));
        }
        Command::Verify { max_n, json } => match verify_suite(max_n) {
            Ok(report) => {
                if json {
                    print!("{}", report.to_json());
                } else {
                    println!("{report}");
                }
                if !report.passed {
                    std::process::exit(1);
                }
            }
            Err(e) => fail(&e.to_string()),
        },
    }
}
