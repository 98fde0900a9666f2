mod output;

use std::fmt::Display;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use qblock::blockone::{block_chart, gl_atypicality, gl_wt, lambda_minus, lambda_plus, to_gl};
use qblock::charring::{
    parabolic_verma_character, tensor_project_report, translate_char, verma_character, TranslationKind,
};
use qblock::io::{parse_scalar, WeightFile};
use qblock::linkage::{atypical_matching, atypicality, linked_approx, linked_sim, same_central_char, wt};
use qblock::reduce::normalize_block;
use qblock::selfcheck;
use qblock::{Error, FormalCharacter, Scalar, Weight, ZigzagAlgebra};

use output::*;

#[derive(Parser)]
#[command(name = "qblock", version, about = "Block combinatorics for category O of q(n)")]
struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum Relation {
    Sim,
    Approx,
    Central,
}

#[derive(Clone, Copy, ValueEnum)]
enum CharKind {
    #[value(name = "M")]
    M,
    #[value(name = "K")]
    K,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    #[value(name = "E")]
    E,
    #[value(name = "F")]
    F,
}

#[derive(clap::Args)]
struct Block {
    /// The scalar s, as a symbol name or in scalar text form.
    #[arg(long = "s")]
    s: String,
    #[arg(long)]
    ell: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Reduce a weight to its Levi normal form.
    Reduce { weight: PathBuf },
    /// Decide whether two weights are linked.
    Linked {
        a: PathBuf,
        b: PathBuf,
        #[arg(long, value_enum, default_value_t = Relation::Sim)]
        relation: Relation,
    },
    /// Atypicality and a maximal set of atypical roots.
    Atyp { weight: PathBuf },
    /// The vector wt(λ) for λ in Λ_{s^ℓ}(n).
    Wt {
        weight: PathBuf,
        #[command(flatten)]
        block: Block,
    },
    /// Truncated character of a Verma (M) or parabolic Verma (K) module.
    Char {
        #[arg(value_enum)]
        kind: CharKind,
        weight: PathBuf,
        #[arg(long, default_value_t = 0)]
        ell: usize,
        #[arg(long)]
        depth: u32,
    },
    /// Translation-functor image of ch K(ζ).
    Translate {
        #[arg(value_enum)]
        kind: Kind,
        weight: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        a: i64,
        #[command(flatten)]
        block: Block,
        #[arg(long)]
        depth: u32,
        /// Compare with the projection of the tensor product.
        #[arg(long)]
        verify: bool,
    },
    /// The neighbour λ⁻ of an atypicality-one weight.
    LambdaMinus {
        weight: PathBuf,
        #[command(flatten)]
        block: Block,
    },
    /// The neighbour λ⁺ of an atypicality-one weight.
    LambdaPlus {
        weight: PathBuf,
        #[command(flatten)]
        block: Block,
    },
    /// Chart of an atypicality-one block.
    BlockQuiver {
        weight: PathBuf,
        #[command(flatten)]
        block: Block,
        #[arg(long)]
        window: usize,
    },
    /// The corresponding gl(ℓ|n−ℓ) weight.
    Glmap {
        weight: PathBuf,
        #[command(flatten)]
        block: Block,
    },
    /// The truncated zigzag algebra.
    Zigzag {
        #[arg(long)]
        window: usize,
        #[arg(long)]
        table: bool,
        #[arg(long)]
        radical: bool,
        #[arg(long, allow_hyphen_values = true)]
        submodules: Option<i64>,
    },
    /// Run the oracle suites.
    Selfcheck {
        #[arg(long, default_value_t = 40)]
        cases: usize,
    },
}

fn read_weight(path: &PathBuf) -> Result<(Weight, Option<Vec<String>>), String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    let file: WeightFile = serde_json::from_str(&text).map_err(|e| format!("{}: {e}", path.display()))?;
    let w = file.to_weight().map_err(|e| e.to_string())?;
    Ok((w, file.symbols))
}

fn read_s(text: &str, declared: Option<&[String]>) -> Result<Scalar, Error> {
    let is_name = text.chars().next().is_some_and(|c| c.is_alphabetic())
        && text.chars().all(|c| c.is_alphanumeric() || c == '_');
    if is_name {
        parse_scalar(&format!("0+{text}*1"), declared)
    } else {
        parse_scalar(text, declared)
    }
}

fn char_out(ch: &FormalCharacter) -> CharOut {
    CharOut {
        character: ch.to_json(),
        lines: ch.to_lines(),
    }
}

fn flag_terms(flag: &[(Weight, i64)]) -> Vec<FlagTerm> {
    let mut out: Vec<FlagTerm> = flag
        .iter()
        .map(|(w, m)| FlagTerm {
            weight: w.to_texts(),
            multiplicity: *m,
        })
        .collect();
    out.sort_by(|a, b| a.weight.cmp(&b.weight));
    out
}

struct Rendered {
    text: String,
    json: String,
    ok: bool,
}

fn render<T: Serialize + Display>(v: &T) -> Rendered {
    Rendered {
        text: v.to_string(),
        json: serde_json::to_string_pretty(v).expect("serializable output"),
        ok: true,
    }
}

fn run(cli: &Cli) -> Result<Rendered, String> {
    let e = |err: Error| err.to_string();
    Ok(match &cli.command {
        Command::Reduce { weight } => {
            let (l, _) = read_weight(weight)?;
            let r = normalize_block(&l).map_err(e)?;
            render(&ReduceOut {
                input: WeightFile::from_weight(&l),
                class_signature: l.class_signature().to_string(),
                levi: r
                    .levi
                    .iter()
                    .map(|b| LeviOut {
                        size: b.size,
                        class: b.class.to_string(),
                        ell: b.ell,
                    })
                    .collect(),
                shape: r.shape(),
                reduced: WeightFile::from_weight(&r.reduced),
                moves: r
                    .moves
                    .iter()
                    .map(|m| MoveOut {
                        root: m.root.to_string(),
                        flag: format!("{:?}", m.flag).to_lowercase(),
                    })
                    .collect(),
                atypical_moves: r.atypical_moves(),
                notes: r.notes.clone(),
                parity_undetermined: r.parity_undetermined,
            })
        }
        Command::Linked { a, b, relation } => {
            let (l, _) = read_weight(a)?;
            let (m, _) = read_weight(b)?;
            if l.n() != m.n() {
                return Err(format!("precondition violated: ranks differ ({} vs {})", l.n(), m.n()));
            }
            let out = match relation {
                Relation::Sim => LinkedOut {
                    relation: "sim".into(),
                    linked: linked_sim(&l, &m),
                    witness: None,
                },
                Relation::Central => LinkedOut {
                    relation: "central".into(),
                    linked: same_central_char(&l, &m),
                    witness: None,
                },
                Relation::Approx => {
                    let w = linked_approx(&l, &m).map_err(e)?;
                    LinkedOut {
                        relation: "approx".into(),
                        linked: w.is_some(),
                        witness: w.map(|w| w.to_json()),
                    }
                }
            };
            render(&out)
        }
        Command::Atyp { weight } => {
            let (l, _) = read_weight(weight)?;
            render(&AtypOut {
                atypicality: atypicality(&l),
                matching: atypical_matching(&l).iter().map(|r| r.to_string()).collect(),
            })
        }
        Command::Wt { weight, block } => {
            let (l, decl) = read_weight(weight)?;
            let s = read_s(&block.s, decl.as_deref()).map_err(e)?;
            let v = wt(&l, &s, block.ell).map_err(e)?;
            render(&WtOut {
                terms: v.terms().collect(),
                text: v.to_string(),
            })
        }
        Command::Char {
            kind,
            weight,
            ell,
            depth,
        } => {
            let (l, _) = read_weight(weight)?;
            let ch = match kind {
                CharKind::M => verma_character(&l, *depth),
                CharKind::K => parabolic_verma_character(&l, *ell, *depth).map_err(e)?,
            };
            render(&char_out(&ch))
        }
        Command::Translate {
            kind,
            weight,
            a,
            block,
            depth,
            verify,
        } => {
            let (l, decl) = read_weight(weight)?;
            let s = read_s(&block.s, decl.as_deref()).map_err(e)?;
            let kind = match kind {
                Kind::E => TranslationKind::E,
                Kind::F => TranslationKind::F,
            };
            if *verify {
                let rep = tensor_project_report(&l, block.ell, *a, kind, *depth, &s).map_err(e)?;
                let mut r = render(&VerifyOut {
                    holds: rep.holds(),
                    flag: flag_terms(&rep.flag),
                    pieri_flag: flag_terms(&rep.pieri_flag),
                    expected: char_out(&rep.expected),
                });
                r.ok = rep.holds();
                r
            } else {
                let ch = translate_char(kind, *a, &l, block.ell, &s, *depth).map_err(e)?;
                render(&char_out(&ch))
            }
        }
        Command::LambdaMinus { weight, block } | Command::LambdaPlus { weight, block } => {
            let (l, decl) = read_weight(weight)?;
            let s = read_s(&block.s, decl.as_deref()).map_err(e)?;
            let nb = if matches!(cli.command, Command::LambdaMinus { .. }) {
                lambda_minus(&l, &s, block.ell)
            } else {
                lambda_plus(&l, &s, block.ell)
            }
            .map_err(e)?;
            render(&NeighbourOut {
                weight: WeightFile::from_weight(&nb.weight),
                k: nb.k,
            })
        }
        Command::BlockQuiver { weight, block, window } => {
            let (l, decl) = read_weight(weight)?;
            let s = read_s(&block.s, decl.as_deref()).map_err(e)?;
            let c = block_chart(&l, &s, block.ell, *window).map_err(e)?;
            render(&ChartOut {
                window: c.window,
                weights: c.index_range().map(|i| (i, c.weight(i).to_texts())).collect(),
                decomposition: c.decomposition.clone(),
                cartan: c.cartan.clone(),
                edges: c.edges.clone(),
                boundary: c.boundary.clone(),
            })
        }
        Command::Glmap { weight, block } => {
            let (l, decl) = read_weight(weight)?;
            let s = read_s(&block.s, decl.as_deref()).map_err(e)?;
            let g = to_gl(&l, &s, block.ell).map_err(e)?;
            render(&GlOut {
                ell: g.ell,
                wt: gl_wt(&g).to_string(),
                atypicality: gl_atypicality(&g),
                coords: g.coords,
            })
        }
        Command::Zigzag {
            window,
            table,
            radical,
            submodules,
        } => {
            let alg = ZigzagAlgebra::build(*window).map_err(e)?;
            let radical = radical.then(|| {
                let series = alg.radical_series();
                RadicalOut {
                    dims: series.dims(),
                    layers: series.layers.iter().map(|l| alg.describe(l)).collect(),
                }
            });
            let submodules = match submodules {
                Some(i) => {
                    let p = alg.projective(*i).map_err(e)?;
                    Some(SubmodulesOut {
                        vertex: p.vertex,
                        boundary: p.boundary,
                        projective: alg.describe(&p.module),
                        submodules: p.submodules.iter().map(|m| alg.describe(m)).collect(),
                        socle: alg.describe(&p.socle),
                        radical_squared: alg.describe(&p.radical_squared),
                    })
                }
                None => None,
            };
            render(&ZigzagOut {
                window: *window,
                dim: alg.dim(),
                basis: alg.basis().iter().map(|b| b.to_string()).collect(),
                table: table.then(|| alg.table_lines()),
                radical,
                submodules,
            })
        }
        Command::Selfcheck { cases } => {
            let report = selfcheck::run(&selfcheck::Options {
                seed: cli.seed,
                cases: *cases,
                ..Default::default()
            });
            Rendered {
                text: report.to_string(),
                json: serde_json::to_string_pretty(&report).expect("serializable report"),
                ok: report.passed(),
            }
        }
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(r) => {
            let body = match cli.format {
                Format::Json => &r.json,
                Format::Text => &r.text,
            };
            // A closed pipe on stdout is not an error worth reporting.
            let _ = writeln!(std::io::stdout().lock(), "{body}");
            if r.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
