//! Command-line front end: file formats, reports and one subcommand per
//! library operation. Exit codes: 0 success, 1 verification failure,
//! 2 input error.

use clap::{Parser, Subcommand};
use dgalg_cli::{format, report};
use dgalg::auslander::{
    auslander_data, compare_hom_with_quotient, end_of_shifted_sum, gram_matrix,
    quiver_comparison, semisimple_pipeline, verify_generation, verify_semisimple_h,
    verify_triangular, QuiverPresentationKind,
};
use dgalg::builders::{
    a_n_quiver_algebra, beilinson_algebra, double_arrow_quiver_algebra, exterior_algebra,
    path_algebra, truncated_polynomial_algebra,
};
use dgalg::corpus::{corpus_with, dual_numbers, CORPUS_SEED};
use dgalg::dga::{
    glue, jacobson_radical, nilpotency_index, DGAlgebra, GluingSpec,
};
use dgalg::exactlin::FieldSpec;
use report::Report;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

#[derive(Parser)]
#[command(name = "dgalg", version, about = "Exact computations with finite-dimensional DG algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parse an algebra file and check every axiom.
    Validate { file: PathBuf },
    /// Graded dimensions, radical data and cohomology of an algebra.
    Info {
        file: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// The Jacobson radical with its internal and external DG ideals.
    Radical {
        file: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the endomorphism construction and summarize the bundle.
    Auslander {
        file: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run every structural verification; nonzero exit on failure.
    Verify {
        file: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// The Euler pairing matrix of the K collection.
    Gram {
        file: PathBuf,
        /// Shift the i-th object by i-1 first.
        #[arg(long)]
        normalize: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Write a built-in family member (or a quiver file) as an algebra file.
    Gen {
        /// exterior | truncated | beilinson | double-arrow | a-n | dual | quiver
        family: String,
        /// The size parameter, or the quiver file path for `quiver`.
        arg: String,
        #[arg(long, default_value = "Q")]
        field: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Glue two algebra files along a bimodule file.
    Glue {
        #[arg(long)]
        r: PathBuf,
        #[arg(long)]
        s: PathBuf,
        #[arg(long)]
        t: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Write the whole reproducible corpus as algebra files.
    Corpus {
        #[arg(long, default_value_t = CORPUS_SEED)]
        seed: u64,
        #[arg(long)]
        out_dir: PathBuf,
        #[arg(long, default_value = "Q")]
        field: String,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn parse_field_flag(text: &str) -> Result<FieldSpec, String> {
    if text == "Q" {
        return Ok(FieldSpec::Rationals);
    }
    if let Some(p) = text.strip_prefix("Fp:") {
        let p: u64 = p.parse().map_err(|_| format!("bad prime in `{text}`"))?;
        return FieldSpec::prime_field(p).map_err(|e| e.to_string());
    }
    Err(format!("unknown field `{text}` (use Q or Fp:<p>)"))
}

fn load_algebra(path: &Path) -> Result<(DGAlgebra, Vec<u8>), String> {
    let bytes = std::fs::read(path).map_err(|e| format!("{}: {e}", path.display()))?;
    let text = String::from_utf8(bytes.clone()).map_err(|_| "file is not UTF-8".to_string())?;
    let algebra = format::parse_algebra(&text).map_err(|e| e.to_string())?;
    Ok((algebra, bytes))
}

fn emit(out: &Option<PathBuf>, content: &str) -> Result<(), String> {
    match out {
        Some(path) => std::fs::write(path, content).map_err(|e| format!("{}: {e}", path.display())),
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.command {
        Command::Validate { file } => {
            // distinguish parse/validation failures for the exit message
            let bytes = std::fs::read(&file).map_err(|e| format!("{}: {e}", file.display()))?;
            let text = String::from_utf8(bytes).map_err(|_| "file is not UTF-8".to_string())?;
            match format::parse_algebra(&text) {
                Ok(alg) => {
                    println!("valid: dim {} over {}", alg.dim(), alg.field());
                    Ok(ExitCode::SUCCESS)
                }
                Err(e) => Err(e.to_string()),
            }
        }
        Command::Info { file, out } => {
            let (alg, bytes) = load_algebra(&file)?;
            let mut rep = Report::new("info", &file.display().to_string(), &bytes);
            rep.kv("field", alg.field());
            rep.kv("dim", alg.dim());
            let dims = alg
                .degree_indices()
                .into_iter()
                .map(|(q, v)| (q, v.len()))
                .collect();
            rep.graded_dims("graded_dims", &dims);
            rep.graded_dims("cohomology_dims", alg.complex().cohomology().dims());
            let radical = jacobson_radical(&alg).map_err(|e| e.to_string())?;
            rep.graded_dims("radical_dims", &radical.graded_dims(&alg));
            let n = nilpotency_index(&alg, &radical).map_err(|e| e.to_string())?;
            rep.kv("nilpotency_index", n);
            emit(&out, &rep.render())?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Radical { file, out } => {
            let (alg, bytes) = load_algebra(&file)?;
            let mut rep = Report::new("radical", &file.display().to_string(), &bytes);
            let radical = jacobson_radical(&alg).map_err(|e| e.to_string())?;
            rep.kv("radical_dim", radical.dim());
            rep.graded_dims("radical_dims", &radical.graded_dims(&alg));
            let n = nilpotency_index(&alg, &radical).map_err(|e| e.to_string())?;
            rep.kv("nilpotency_index", n);
            let internal = dgalg::dga::internal_dg_ideal(&alg, &radical);
            let external = dgalg::dga::external_dg_ideal(&alg, &radical);
            rep.kv("internal_dim", internal.dim());
            rep.kv("external_dim", external.dim());
            rep.kv("d_stable", radical.is_d_closed(&alg));
            emit(&out, &rep.render())?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Auslander { file, out } => {
            let (alg, bytes) = load_algebra(&file)?;
            let data = auslander_data(&Arc::new(alg)).map_err(|e| e.to_string())?;
            let mut rep = Report::new("auslander", &file.display().to_string(), &bytes);
            rep.kv("nilpotency_index", data.nilpotency);
            for (p, ideal) in data.j_chain.iter().enumerate() {
                rep.kv(&format!("j_{}_dim", p + 1), ideal.dim());
            }
            for (p, m) in data.m_modules.iter().enumerate() {
                rep.kv(&format!("m_{}_dim", p + 1), m.dim());
            }
            rep.kv("m_dim", data.big_m.dim());
            rep.kv("end_dim", data.end.dim());
            let e_dims = data
                .end
                .algebra()
                .degree_indices()
                .into_iter()
                .map(|(q, v)| (q, v.len()))
                .collect();
            rep.graded_dims("end_graded_dims", &e_dims);
            for (s, p) in data.p_modules.iter().enumerate() {
                rep.kv(&format!("p_{}_dim", s + 1), p.dim());
            }
            for (i, k) in data.k_modules.iter().enumerate() {
                rep.kv(&format!("k_{}_dim", i + 1), k.dim());
            }
            rep.section("hom_tables");
            for i in 1..=data.nilpotency {
                for j in 1..=data.nilpotency {
                    rep.graded_dims(
                        &format!("hom_k{}_k{}", i, j),
                        &data.k_hom(i, j).graded_dims(),
                    );
                }
            }
            let shifted = end_of_shifted_sum(&data);
            rep.section("shifted_sum");
            rep.kv("h_total_dim", shifted.total_h_dim());
            rep.kv("h_degree_zero", shifted.h_concentrated_in_degree_zero());
            for i in 1..=data.nilpotency {
                for j in i..=data.nilpotency {
                    rep.graded_dims(
                        &format!("h_block_{}_{}", i, j),
                        &shifted.block_h_dims[&(i, j)],
                    );
                }
            }
            rep.kv(
                "quiver_orthogonal",
                format!("{:?}", quiver_comparison(&shifted, QuiverPresentationKind::Orthogonal)),
            );
            rep.kv(
                "quiver_interlaced",
                format!("{:?}", quiver_comparison(&shifted, QuiverPresentationKind::Interlaced)),
            );
            emit(&out, &rep.render())?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { file, out } => {
            let (alg, bytes) = load_algebra(&file)?;
            let data = auslander_data(&Arc::new(alg)).map_err(|e| e.to_string())?;
            let mut rep = Report::new("verify", &file.display().to_string(), &bytes);
            let tri = verify_triangular(&data);
            for (&(i, j), &ok) in &tri.acyclic {
                rep.check(&format!("triangular_{}_{}", i, j), ok);
            }
            rep.section("hom_tables");
            for (&(i, j), dims) in &tri.hom_dims {
                rep.graded_dims(&format!("hom_k{}_k{}", i, j), dims);
            }
            rep.section("semisimplicity");
            for i in 1..=data.nilpotency {
                match verify_semisimple_h(&data, i) {
                    Ok(cert) => {
                        rep.graded_dims(&format!("h_end_k{}_dims", i), &cert.h_graded_dims);
                        rep.check(&format!("semisimple_h_{i}"), cert.pass());
                    }
                    Err(e) => {
                        rep.kv(&format!("semisimple_h_{i}_error"), e);
                        rep.check(&format!("semisimple_h_{i}"), false);
                    }
                }
            }
            rep.section("pipeline");
            for i in 2..=data.nilpotency {
                let pipeline = semisimple_pipeline(&data, i);
                for (step, ok) in &pipeline.steps {
                    rep.check(&format!("pipeline_{i}: {step}"), *ok);
                }
            }
            rep.section("generation");
            let gen = verify_generation(&data);
            for (&i, &ok) in &gen.cone_quasi_iso {
                rep.check(&format!("cone_reconstructs_p_{i}"), ok);
            }
            rep.section("hom_quotient");
            for i in 1..=data.nilpotency {
                for j in 1..=i {
                    match compare_hom_with_quotient(&data, i, j) {
                        Ok(cmp) => {
                            rep.check(&format!("hom_p{}_p{}_is_quotient", i, j), true);
                            if i == data.nilpotency && j == data.nilpotency {
                                rep.check("end_p_n_is_r", cmp.multiplicative);
                            }
                        }
                        Err(e) => {
                            rep.kv(&format!("hom_p{}_p{}_error", i, j), e);
                            rep.check(&format!("hom_p{}_p{}_is_quotient", i, j), false);
                        }
                    }
                }
            }
            let failed = rep.failed();
            emit(&out, &rep.render())?;
            Ok(if failed { ExitCode::from(1) } else { ExitCode::SUCCESS })
        }
        Command::Gram { file, normalize, out } => {
            let (alg, bytes) = load_algebra(&file)?;
            let data = auslander_data(&Arc::new(alg)).map_err(|e| e.to_string())?;
            let g = gram_matrix(&data, normalize);
            let mut rep = Report::new("gram", &file.display().to_string(), &bytes);
            rep.kv("normalize", normalize);
            rep.matrix("gram", &g);
            emit(&out, &rep.render())?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Gen { family, arg, field, out } => {
            let field = parse_field_flag(&field)?;
            let algebra = match family.as_str() {
                "quiver" => {
                    let text = std::fs::read_to_string(&arg).map_err(|e| format!("{arg}: {e}"))?;
                    let quiver = format::parse_quiver(&text, field).map_err(|e| e.to_string())?;
                    path_algebra(&quiver, field).map_err(|e| e.to_string())?.algebra
                }
                "dual" => {
                    // generator degree; -1 gives the acyclic variant
                    let degree: i64 = arg
                        .parse()
                        .map_err(|_| format!("degree must be an integer, got `{arg}`"))?;
                    dual_numbers(degree, field)
                }
                _ => {
                    let n: usize = arg
                        .parse()
                        .map_err(|_| format!("family size must be an integer, got `{arg}`"))?;
                    match family.as_str() {
                        "exterior" => exterior_algebra(n, field),
                        "truncated" => truncated_polynomial_algebra(n, field),
                        "beilinson" => beilinson_algebra(n, field).algebra,
                        "double-arrow" => double_arrow_quiver_algebra(n, field).algebra,
                        "a-n" => a_n_quiver_algebra(n, field).algebra,
                        other => return Err(format!("unknown family `{other}`")),
                    }
                }
            };
            emit(&out, &format::serialize_algebra(&algebra))?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Glue { r, s, t, out } => {
            let (r_alg, _) = load_algebra(&r)?;
            let (s_alg, _) = load_algebra(&s)?;
            let t_text = std::fs::read_to_string(&t).map_err(|e| format!("{}: {e}", t.display()))?;
            let bimodule =
                format::parse_bimodule(&t_text, &r_alg, &s_alg).map_err(|e| e.to_string())?;
            let glued = glue(&GluingSpec { r: r_alg, s: s_alg, t: bimodule })
                .map_err(|e| e.to_string())?;
            emit(&out, &format::serialize_algebra(&glued.algebra))?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Corpus { seed, out_dir, field } => {
            let field = parse_field_flag(&field)?;
            std::fs::create_dir_all(&out_dir)
                .map_err(|e| format!("{}: {e}", out_dir.display()))?;
            for entry in corpus_with(field, seed, 8) {
                let path = out_dir.join(format!("{}.dga", entry.name));
                std::fs::write(&path, format::serialize_algebra(&entry.algebra))
                    .map_err(|e| format!("{}: {e}", path.display()))?;
            }
            println!("corpus written to {}", out_dir.display());
            Ok(ExitCode::SUCCESS)
        }
    }
}
