//! Command-line surface over the translucent-letter automata library.
//!
//! Exit codes: 0 for success (including ACCEPT and EQUAL), 1 for negative
//! analysis results (REJECT, counterexample, lemma violation, exhausted
//! search, failed corpus verification), 2 for usage, file, parse and
//! infeasible-bound errors.

use std::fs;
use std::path::{Path, PathBuf};
use std::process;

use clap::{Parser, Subcommand};

use translucent::alphabet::{Alphabet, Word};
use translucent::automaton::Automaton;
use translucent::classify::classify;
use translucent::constructions::{self, search_sfawtl, SearchOutcome, SearchSpaceSpec};
use translucent::corpus::{get_entry, list_entries, verify_entry, Oracle, VerifyOutcome};
use translucent::engine::{accepts, first_trace};
use translucent::format::{export_dot, parse, serialize};
use translucent::langops::{
    bounded_equivalent, check_letter_equivalence_lemma, enumerate, parikh_up_to,
    ConstructionCheck, Equivalence,
};

#[derive(Parser)]
#[command(name = "translucent", version, about = "Analyze finite automata with translucent letters")]
struct Cli {
    /// Seed for randomized commands; reserved, current commands are
    /// deterministic and ignore it.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide membership of a word; prints ACCEPT or REJECT.
    Check {
        file: PathBuf,
        /// Symbol tokens, unseparated if single characters, else
        /// comma-separated.
        word: String,
        /// Print the first accepting computation, one erase step per line.
        #[arg(long)]
        trace: bool,
    },
    /// List all accepted words up to a length bound.
    Enum {
        file: PathBuf,
        #[arg(long, value_name = "N")]
        max_len: usize,
        /// Print the distinct letter-count vectors instead of the words.
        #[arg(long)]
        parikh: bool,
    },
    /// Print the structural flags and model labels of an automaton.
    Classify { file: PathBuf },
    /// Compare two automata on every word up to a length bound.
    Equiv {
        file_a: PathBuf,
        file_b: PathBuf,
        #[arg(long, value_name = "N")]
        max_len: usize,
    },
    /// Write the disjoint union of two automata over a shared alphabet.
    Union {
        file_a: PathBuf,
        file_b: PathBuf,
        #[arg(short, value_name = "FILE")]
        output: PathBuf,
    },
    /// Check letter equivalence of the derived disjoint and
    /// translucency-free machines against the original.
    LemmaCheck {
        file: PathBuf,
        #[arg(long, value_name = "N")]
        max_len: usize,
    },
    /// Exhaustively search line-graph-shaped state-deterministic machines
    /// for a target language.
    SearchSfawtl {
        /// A corpus entry name with a closed-form oracle, `a*+b*`, or
        /// `ab+aaab-concat`.
        #[arg(long)]
        target: String,
        #[arg(long, value_name = "K")]
        max_states: usize,
        #[arg(long, value_name = "N")]
        test_len: usize,
    },
    /// Inspect the built-in example machines.
    Corpus {
        #[command(subcommand)]
        action: CorpusAction,
    },
    /// Print the automaton as a DOT digraph.
    Dot { file: PathBuf },
}

#[derive(Subcommand)]
enum CorpusAction {
    /// Print the registered entry names.
    List,
    /// Print an entry with its provenance as a serialized file.
    Show { name: String },
    /// Check an entry against its oracle and expected labels.
    Verify {
        name: String,
        #[arg(long, value_name = "N")]
        max_len: usize,
    },
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => e.exit(),
    };
    match run(cli.command) {
        Ok(code) => process::exit(code),
        Err(message) => {
            eprintln!("error: {message}");
            process::exit(2);
        }
    }
}

fn load(path: &Path) -> Result<Automaton, String> {
    let text =
        fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    parse(&text).map_err(|e| format!("{}: {e}", path.display()))
}

/// Words are shown verbatim except the empty word, which prints as `""`.
fn show_word(word: &str) -> &str {
    if word.is_empty() {
        "\"\""
    } else {
        word
    }
}

fn show_check(a: &Automaton, check: &ConstructionCheck) -> String {
    match check {
        ConstructionCheck::Equal => "letter-equivalent".into(),
        ConstructionCheck::Differs {
            vector,
            missing_from_variant,
        } => format!(
            "differs on letter counts [{}], realized by the {} only",
            vector.format(a.alphabet()),
            if *missing_from_variant {
                "original"
            } else {
                "derived machine"
            }
        ),
    }
}

fn run(command: Command) -> Result<i32, String> {
    match command {
        Command::Check { file, word, trace } => {
            let a = load(&file)?;
            let w = a
                .alphabet()
                .parse_word(&word)
                .map_err(|e| format!("word {word:?}: {e}"))?;
            if trace {
                match first_trace(&a, &w) {
                    Some(t) => {
                        for s in &t.steps {
                            println!(
                                "{} {} {} -> {}",
                                a.state_name(s.from_state),
                                s.erased_position,
                                a.alphabet().token(s.erased_letter),
                                a.state_name(s.to_state)
                            );
                        }
                        println!("ACCEPT");
                        Ok(0)
                    }
                    None => {
                        println!("REJECT");
                        Ok(1)
                    }
                }
            } else if accepts(&a, &w) {
                println!("ACCEPT");
                Ok(0)
            } else {
                println!("REJECT");
                Ok(1)
            }
        }
        Command::Enum {
            file,
            max_len,
            parikh,
        } => {
            let a = load(&file)?;
            if parikh {
                for v in parikh_up_to(&a, max_len).map_err(|e| e.to_string())? {
                    println!("{}", v.format(a.alphabet()));
                }
            } else {
                for w in enumerate(&a, max_len).map_err(|e| e.to_string())?.iter() {
                    println!("{}", show_word(&a.alphabet().format_word(w)));
                }
            }
            Ok(0)
        }
        Command::Classify { file } => {
            let p = classify(&load(&file)?);
            println!("single_initial={}", p.single_initial);
            println!("deterministic_transitions={}", p.deterministic_transitions);
            println!("disjoint_translucency={}", p.disjoint_translucency);
            println!("state_deterministic={}", p.state_deterministic);
            let labels: Vec<String> = p.labels.iter().map(|l| l.to_string()).collect();
            println!("labels={}", labels.join(" "));
            Ok(0)
        }
        Command::Equiv {
            file_a,
            file_b,
            max_len,
        } => {
            let a = load(&file_a)?;
            let b = load(&file_b)?;
            match bounded_equivalent(&a, &b, max_len).map_err(|e| e.to_string())? {
                Equivalence::Equal => {
                    println!("EQUAL");
                    Ok(0)
                }
                Equivalence::Counterexample { word, in_first } => {
                    println!(
                        "COUNTEREXAMPLE {} in={}",
                        show_word(&a.alphabet().format_word(&word)),
                        if in_first { "A" } else { "B" }
                    );
                    Ok(1)
                }
            }
        }
        Command::Union {
            file_a,
            file_b,
            output,
        } => {
            let a = load(&file_a)?;
            let b = load(&file_b)?;
            let u = constructions::union(&a, &b).map_err(|e| e.to_string())?;
            fs::write(&output, serialize(&u))
                .map_err(|e| format!("cannot write {}: {e}", output.display()))?;
            Ok(0)
        }
        Command::LemmaCheck { file, max_len } => {
            let a = load(&file)?;
            let report = check_letter_equivalence_lemma(&a, max_len).map_err(|e| e.to_string())?;
            println!("remove-overlap: {}", show_check(&a, &report.remove_overlap));
            println!(
                "drop-translucency: {}",
                show_check(&a, &report.drop_translucency)
            );
            if report.passed() {
                println!("PASS");
                Ok(0)
            } else {
                println!("VIOLATION");
                Ok(1)
            }
        }
        Command::SearchSfawtl {
            target,
            max_states,
            test_len,
        } => {
            let (alphabet, predicate): (Alphabet, Box<dyn Fn(&Word) -> bool>) =
                resolve_target(&target)?;
            let spec = SearchSpaceSpec::new(alphabet, max_states, test_len);
            match search_sfawtl(&*predicate, &spec).map_err(|e| e.to_string())? {
                SearchOutcome::Found { automaton, .. } => {
                    print!("{}", serialize(&automaton));
                    Ok(0)
                }
                SearchOutcome::Exhausted {
                    test_len, caveats, ..
                } => {
                    println!("EXHAUSTED (bound {test_len}, structure line-graph)");
                    for caveat in caveats {
                        println!("caveat: {caveat}");
                    }
                    Ok(1)
                }
            }
        }
        Command::Corpus { action } => match action {
            CorpusAction::List => {
                for name in list_entries().map_err(|e| e.to_string())? {
                    println!("{name}");
                }
                Ok(0)
            }
            CorpusAction::Show { name } => {
                let e = get_entry(&name).map_err(|e| e.to_string())?;
                println!("# {}", e.name);
                println!("# {}", e.provenance);
                let labels: Vec<String> =
                    e.expected_labels.iter().map(|l| l.to_string()).collect();
                println!("# labels: {}", labels.join(" "));
                print!("{}", serialize(&e.automaton));
                Ok(0)
            }
            CorpusAction::Verify { name, max_len } => {
                match verify_entry(&name, max_len).map_err(|e| e.to_string())? {
                    VerifyOutcome::Pass => {
                        println!("PASS");
                        Ok(0)
                    }
                    VerifyOutcome::LabelMismatch {
                        missing,
                        unexpected,
                    } => {
                        let fmt = |ls: &[translucent::classify::VariantLabel]| {
                            ls.iter()
                                .map(|l| l.to_string())
                                .collect::<Vec<_>>()
                                .join(" ")
                        };
                        println!(
                            "LABEL MISMATCH missing=[{}] unexpected=[{}]",
                            fmt(&missing),
                            fmt(&unexpected)
                        );
                        Ok(1)
                    }
                    VerifyOutcome::Counterexample { word, in_automaton } => {
                        println!(
                            "COUNTEREXAMPLE {} in={}",
                            show_word(&word),
                            if in_automaton { "machine" } else { "oracle" }
                        );
                        Ok(1)
                    }
                    VerifyOutcome::PropertyViolation(detail) => {
                        println!("PROPERTY VIOLATION: {detail}");
                        Ok(1)
                    }
                }
            }
        },
        Command::Dot { file } => {
            print!("{}", export_dot(&load(&file)?));
            Ok(0)
        }
    }
}

/// Maps a search target name to its alphabet and membership predicate.
fn resolve_target(target: &str) -> Result<(Alphabet, Box<dyn Fn(&Word) -> bool>), String> {
    match target {
        "a*+b*" => {
            let al = Alphabet::new(["a", "b"]).unwrap();
            Ok((
                al,
                Box::new(|w: &Word| w.letters().windows(2).all(|p| p[0] == p[1])),
            ))
        }
        "ab+aaab-concat" => {
            let al = Alphabet::new(["a", "b"]).unwrap();
            let inner = al.clone();
            Ok((
                al,
                Box::new(move |w: &Word| {
                    let s = inner.format_word(w);
                    s == "ab" || s == "aaab"
                }),
            ))
        }
        name => {
            let entry = get_entry(name).map_err(|e| e.to_string())?;
            match entry.oracle {
                Oracle::Exact(f) => {
                    let al = entry.automaton.alphabet().clone();
                    let inner = al.clone();
                    Ok((al, Box::new(move |w: &Word| f(&inner, w))))
                }
                Oracle::Properties(_) => Err(format!(
                    "corpus entry {name} has a property-bundle oracle, not a word predicate"
                )),
            }
        }
    }
}
