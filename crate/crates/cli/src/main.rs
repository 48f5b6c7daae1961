//! Command-line front end for the fan-graph spanning-tree library:
//! generation, ranking, unranking, counting, verification, benchmarking,
//! plus a small menu-driven mode.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or input error.
//! Data goes to stdout, diagnostics to stderr.

use std::io::{self, BufRead, Write};
use std::ops::ControlFlow;
use std::process::ExitCode;
use std::str::FromStr;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;

use fan_trees::graph::EdgeMove;
use fan_trees::greedy::GreedyState;
use fan_trees::oracle::{self, MAX_ORACLE_N};
use fan_trees::rank;
use fan_trees::recursive;
use fan_trees::tree::SpanningTree;

#[derive(Parser)]
#[command(
    name = "fan-trees",
    version,
    about = "Spanning trees of the fan graph as a pivot Gray code",
    arg_required_else_help = true
)]
struct Cli {
    /// Menu-driven mode instead of a subcommand.
    #[arg(long)]
    interactive: bool,

    #[command(subcommand)]
    cmd: Option<Cmd>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Stream the spanning-tree listing of the fan on n vertices.
    Gen {
        /// Number of vertices, hub included (n >= 2).
        n: u32,
        #[arg(long, value_enum, default_value_t = Engine::Recursive)]
        engine: Engine,
        /// Emit the listing back to front.
        #[arg(long)]
        reverse: bool,
        #[arg(long, value_enum, default_value_t = Format::Trees)]
        format: Format,
        /// Stop after this many trees.
        #[arg(long)]
        limit: Option<u64>,
    },
    /// Position (1-based) of a tree in the listing.
    Rank {
        n: u32,
        /// The tree, serialized: edges "lo,hi" joined by ";", hub as "inf".
        #[arg(long)]
        tree: String,
    },
    /// The tree at a 1-based position in the listing.
    Unrank {
        n: u32,
        /// Position, 1 through the tree count (arbitrarily large).
        rank: String,
    },
    /// Number of spanning trees of the fan on n vertices.
    Count { n: u32 },
    /// Check a full generated listing against the brute-force oracle.
    Verify {
        /// Number of vertices; capped by the oracle's range.
        n: u32,
        #[arg(long, value_enum, default_value_t = Engine::Recursive)]
        engine: Engine,
    },
    /// Time a full generation run, discarding the trees.
    Bench {
        n: u32,
        #[arg(long, value_enum, default_value_t = Engine::Recursive)]
        engine: Engine,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Engine {
    Recursive,
    Greedy,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    /// One serialized tree per line.
    Trees,
    /// One move per line: "-u,v +u,w".
    Moves,
    /// The first tree, then alternating move and tree lines.
    Both,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = if cli.interactive {
        interactive()
    } else {
        match cli.cmd {
            Some(cmd) => run(cmd),
            // arg_required_else_help guarantees a subcommand or a flag, but
            // a bare `--interactive=false` style call still lands here.
            None => usage_error("a subcommand is required (try --help)"),
        }
    };
    ExitCode::from(code)
}

fn run(cmd: Cmd) -> u8 {
    match cmd {
        Cmd::Gen {
            n,
            engine,
            reverse,
            format,
            limit,
        } => match gen_stream(n, engine, reverse, format, limit) {
            Ok(code) => code,
            Err(e) if e.kind() == io::ErrorKind::BrokenPipe => 0,
            Err(e) => {
                eprintln!("error: {e}");
                1
            }
        },
        Cmd::Rank { n, tree } => cmd_rank(n, &tree),
        Cmd::Unrank { n, rank } => cmd_unrank(n, &rank),
        Cmd::Count { n } => match rank::tree_count(n) {
            Ok(t) => {
                println!("{t}");
                0
            }
            Err(e) => usage_error(&e.to_string()),
        },
        Cmd::Verify { n, engine } => cmd_verify(n, engine),
        Cmd::Bench { n, engine } => cmd_bench(n, engine),
    }
}

fn usage_error(msg: &str) -> u8 {
    eprintln!("error: {msg}");
    2
}

fn warn_greedy_memory(n: u32) {
    if n > MAX_ORACLE_N {
        eprintln!(
            "warning: the greedy engine stores every visited tree; \
             n={n} needs memory proportional to the full tree count"
        );
    }
}

fn write_step(
    w: &mut impl Write,
    format: Format,
    mv: Option<&EdgeMove>,
    tree: &SpanningTree,
) -> io::Result<()> {
    match format {
        Format::Trees => writeln!(w, "{tree}"),
        Format::Moves => match mv {
            Some(m) => writeln!(w, "{m}"),
            None => Ok(()),
        },
        Format::Both => {
            if let Some(m) = mv {
                writeln!(w, "{m}")?;
            }
            writeln!(w, "{tree}")
        }
    }
}

fn gen_stream(
    n: u32,
    engine: Engine,
    reverse: bool,
    format: Format,
    limit: Option<u64>,
) -> io::Result<u8> {
    let mut w = io::BufWriter::new(io::stdout().lock());
    match engine {
        Engine::Recursive => {
            let mut emitted = 0u64;
            let mut io_err: Option<io::Error> = None;
            let sink = |mv: Option<&EdgeMove>, t: &SpanningTree| {
                if limit.is_some_and(|l| emitted >= l) {
                    return ControlFlow::Break(());
                }
                match write_step(&mut w, format, mv, t) {
                    Ok(()) => {
                        emitted += 1;
                        ControlFlow::Continue(())
                    }
                    Err(e) => {
                        io_err = Some(e);
                        ControlFlow::Break(())
                    }
                }
            };
            let run = if reverse {
                recursive::visit_rev_list(n, sink)
            } else {
                recursive::visit_list(n, sink)
            };
            if let Some(e) = io_err {
                return Err(e);
            }
            if let Err(e) = run {
                return Ok(usage_error(&e.to_string()));
            }
        }
        Engine::Greedy => {
            warn_greedy_memory(n);
            let start = if reverse {
                recursive::last_tree(n)
            } else {
                SpanningTree::path(n)
            };
            let start = match start {
                Ok(t) => t,
                Err(e) => return Ok(usage_error(&e.to_string())),
            };
            let mut emitted = 0u64;
            if limit != Some(0) {
                let mut state = GreedyState::new(start);
                write_step(&mut w, format, None, state.current())?;
                emitted += 1;
                while limit.is_none_or(|l| emitted < l) {
                    match state.advance() {
                        Some(mv) => {
                            write_step(&mut w, format, Some(&mv), state.current())?;
                            emitted += 1;
                        }
                        None => break,
                    }
                }
            }
        }
    }
    w.flush()?;
    Ok(0)
}

fn cmd_rank(n: u32, tree: &str) -> u8 {
    let tree = match SpanningTree::parse(n, tree) {
        Ok(t) => t,
        Err(e) => return usage_error(&e.to_string()),
    };
    match rank::rank(n, &tree) {
        Ok(r) => {
            println!("{r}");
            0
        }
        Err(e) => usage_error(&e.to_string()),
    }
}

fn cmd_unrank(n: u32, rank_text: &str) -> u8 {
    let r = match BigUint::from_str(rank_text.trim()) {
        Ok(r) => r,
        Err(e) => return usage_error(&format!("rank {rank_text:?}: {e}")),
    };
    match rank::unrank(n, &r) {
        Ok(t) => {
            println!("{t}");
            0
        }
        Err(e) => usage_error(&e.to_string()),
    }
}

fn cmd_verify(n: u32, engine: Engine) -> u8 {
    let listing = match engine {
        Engine::Recursive => match recursive::list(n) {
            Ok(l) => l,
            Err(e) => return usage_error(&e.to_string()),
        },
        Engine::Greedy => {
            let start = match SpanningTree::path(n) {
                Ok(t) => t,
                Err(e) => return usage_error(&e.to_string()),
            };
            fan_trees::greedy::greedy_listing(&start, None)
        }
    };
    let report = match oracle::verify_listing(n, &listing) {
        Ok(r) => r,
        Err(e) => return usage_error(&e.to_string()),
    };
    println!(
        "n={} trees={} distinct={} exhaustive={} pivot_ok={}",
        report.n, report.tree_total, report.distinct, report.exhaustive, report.pivot_ok
    );
    if report.all_ok() {
        0
    } else {
        if let Some((idx, what)) = &report.first_violation {
            eprintln!("verification failed at index {idx}: {what}");
        }
        1
    }
}

fn cmd_bench(n: u32, engine: Engine) -> u8 {
    let start = Instant::now();
    let trees: u64 = match engine {
        Engine::Recursive => {
            match recursive::visit_list(n, |_, _| ControlFlow::Continue(())) {
                Ok(stats) => stats.trees,
                Err(e) => return usage_error(&e.to_string()),
            }
        }
        Engine::Greedy => {
            warn_greedy_memory(n);
            let path = match SpanningTree::path(n) {
                Ok(t) => t,
                Err(e) => return usage_error(&e.to_string()),
            };
            let mut state = GreedyState::new(path);
            while state.advance().is_some() {}
            state.emitted()
        }
    };
    let seconds = start.elapsed().as_secs_f64();
    let rate = if seconds > 0.0 {
        trees as f64 / seconds
    } else {
        f64::INFINITY
    };
    println!("trees={trees} seconds={seconds:.3} trees_per_sec={rate:.0}");
    0
}

/// Menu loop in the spirit of the original tool: pick an action, answer the
/// prompts. Reads stdin line by line; EOF or "q" quits.
fn interactive() -> u8 {
    let stdin = io::stdin();
    let mut lines = stdin.lock().lines();
    loop {
        println!("------------------------------");
        println!("1. List trees");
        println!("2. Rank a tree");
        println!("3. Unrank a position");
        println!("q. Quit");
        let Some(choice) = prompt(&mut lines, "> ") else {
            return 0;
        };
        match choice.as_str() {
            "1" => {
                let Some(n) = read_n(&mut lines) else { continue };
                let mut w = io::BufWriter::new(io::stdout().lock());
                let run = recursive::visit_list(n, |_, t| {
                    if writeln!(w, "{t}").is_err() {
                        return ControlFlow::Break(());
                    }
                    ControlFlow::Continue(())
                });
                drop(w);
                if let Err(e) = run {
                    eprintln!("error: {e}");
                }
            }
            "2" => {
                let Some(n) = read_n(&mut lines) else { continue };
                let Some(text) = prompt(&mut lines, "tree: ") else {
                    return 0;
                };
                if cmd_rank(n, &text) != 0 {
                    continue;
                }
            }
            "3" => {
                let Some(n) = read_n(&mut lines) else { continue };
                let bound = match rank::tree_count(n) {
                    Ok(t) => t,
                    Err(e) => {
                        eprintln!("error: {e}");
                        continue;
                    }
                };
                let Some(text) = prompt(&mut lines, &format!("rank (1 to {bound}): ")) else {
                    return 0;
                };
                if cmd_unrank(n, &text) != 0 {
                    continue;
                }
            }
            "q" | "quit" | "exit" => return 0,
            other => eprintln!("unknown choice {other:?}"),
        }
    }
}

/// Prints a prompt and reads one trimmed line; None on EOF.
fn prompt(
    lines: &mut impl Iterator<Item = io::Result<String>>,
    text: &str,
) -> Option<String> {
    print!("{text}");
    let _ = io::stdout().flush();
    match lines.next() {
        Some(Ok(line)) => Some(line.trim().to_string()),
        _ => None,
    }
}

fn read_n(lines: &mut impl Iterator<Item = io::Result<String>>) -> Option<u32> {
    let text = prompt(lines, "n: ")?;
    match text.parse::<u32>() {
        Ok(n) if n >= 2 => Some(n),
        _ => {
            eprintln!("error: n must be an integer of at least 2, got {text:?}");
            None
        }
    }
}
