//! Subcommand implementations.

use std::fs;
use std::path::Path;

use anyhow::{bail, Context};

use sympow_core::points::{radical_ideal, random_rational_config, star_configuration, symbolic_power};
use sympow_core::text::{detect_field, format_points, parse_ideal_str, parse_points_str};
use sympow_core::{
    Configuration, CycloElement, Field, FieldKind, Ideal, Polynomial, Rational, TermOrder,
    VerifyOptions,
};

use crate::args::{Command, GenFamily, OrderArg, OutputFormat};
use crate::report;

pub fn run(command: Command) -> anyhow::Result<u8> {
    match command {
        Command::VerifyHesse {
            skip_graded,
            t,
            format,
            threads,
        } => run_verify(skip_graded, t, format, threads),
        Command::Check {
            points,
            m,
            r,
            threads,
        } => run_check(&points, m, r, threads),
        Command::Gb { ideal, order } => run_gb(&ideal, order),
        Command::Hilbert {
            points,
            symbolic,
            power,
            t,
        } => run_hilbert(&points, symbolic, power, &t),
        Command::Gen { family } => run_gen(family),
    }
}

fn run_verify(
    skip_graded: bool,
    t_values: Vec<u64>,
    format: OutputFormat,
    threads: usize,
) -> anyhow::Result<u8> {
    if let Some(bad) = t_values.iter().find(|&&t| t < 10) {
        bail!("--t values must be at least 10 (got {bad}); the graded comparison below degree 10 is the counterexample itself");
    }
    let opts = VerifyOptions {
        skip_graded,
        t_values,
        threads,
    };
    let report = sympow_core::verify::run_all(&opts);
    match format {
        OutputFormat::Text => print!("{}", report::render_text(&report)),
        OutputFormat::Structured => println!("{}", report::render_json(&report)),
    }
    Ok(if report.overall { 0 } else { 1 })
}

enum AnyConfig {
    Rational(Configuration<Rational>),
    Cyclotomic(Configuration<CycloElement>),
}

fn load_points(path: &Path) -> anyhow::Result<AnyConfig> {
    let text = fs::read_to_string(path)
        .with_context(|| format!("cannot read point file {}", path.display()))?;
    let cfg = match detect_field(&text) {
        FieldKind::Rational => AnyConfig::Rational(parse_points_str::<Rational>(&text)?),
        FieldKind::Cyclotomic3 => AnyConfig::Cyclotomic(parse_points_str::<CycloElement>(&text)?),
    };
    Ok(cfg)
}

fn check_generic<F: Field>(
    cfg: &Configuration<F>,
    m: u32,
    r: u32,
    threads: usize,
) -> anyhow::Result<(bool, Option<Polynomial<F>>)> {
    let symbolic = symbolic_power(cfg, m)?;
    let ordinary = radical_ideal(cfg)?.power(r)?;
    let witness = ordinary.containment_witness_threaded(&symbolic, threads)?;
    Ok((witness.is_none(), witness))
}

fn run_check(points: &Path, m: u32, r: u32, threads: usize) -> anyhow::Result<u8> {
    let (holds, witness) = match load_points(points)? {
        AnyConfig::Rational(cfg) => {
            let (h, w) = check_generic(&cfg, m, r, threads)?;
            (h, w.map(|p| p.to_string()))
        }
        AnyConfig::Cyclotomic(cfg) => {
            let (h, w) = check_generic(&cfg, m, r, threads)?;
            (h, w.map(|p| p.to_string()))
        }
    };
    if holds {
        println!("containment I^({m}) in I^{r}: HOLDS");
        Ok(0)
    } else {
        println!("containment I^({m}) in I^{r}: FAILS");
        if let Some(w) = witness {
            println!("witness: {w}");
        }
        Ok(1)
    }
}

fn plane_ring_for(kind: FieldKind) -> anyhow::Result<std::sync::Arc<sympow_core::RingDescriptor>> {
    Ok(match kind {
        FieldKind::Rational => sympow_core::points::plane_ring::<Rational>(),
        FieldKind::Cyclotomic3 => sympow_core::points::plane_ring::<CycloElement>(),
    })
}

fn run_gb(path: &Path, order: OrderArg) -> anyhow::Result<u8> {
    let text = fs::read_to_string(path)
        .with_context(|| format!("cannot read ideal file {}", path.display()))?;
    let order = match order {
        OrderArg::Lex => TermOrder::Lex,
        OrderArg::Grevlex => TermOrder::Grevlex,
    };
    let kind = detect_field(&text);
    let ring = plane_ring_for(kind)?;
    match kind {
        FieldKind::Rational => {
            let gens = parse_ideal_str::<Rational>(&ring, &text)?;
            let gb = Ideal::new(&ring, gens)?.groebner(order)?;
            for g in gb.elements() {
                println!("{g}");
            }
        }
        FieldKind::Cyclotomic3 => {
            let gens = parse_ideal_str::<CycloElement>(&ring, &text)?;
            let gb = Ideal::new(&ring, gens)?.groebner(order)?;
            for g in gb.elements() {
                println!("{g}");
            }
        }
    }
    Ok(0)
}

fn hilbert_generic<F: Field>(
    cfg: &Configuration<F>,
    symbolic: bool,
    power: u32,
    ts: &[u64],
) -> anyhow::Result<Vec<(u64, usize)>> {
    let ideal = if symbolic {
        symbolic_power(cfg, power)?
    } else {
        radical_ideal(cfg)?.power(power)?
    };
    let mut out = Vec::with_capacity(ts.len());
    for &t in ts {
        out.push((t, ideal.graded_dim(t)?));
    }
    Ok(out)
}

fn run_hilbert(points: &Path, symbolic: bool, power: u32, ts: &[u64]) -> anyhow::Result<u8> {
    let dims = match load_points(points)? {
        AnyConfig::Rational(cfg) => hilbert_generic(&cfg, symbolic, power, ts)?,
        AnyConfig::Cyclotomic(cfg) => hilbert_generic(&cfg, symbolic, power, ts)?,
    };
    for (t, dim) in dims {
        println!("t={t} dim={dim}");
    }
    Ok(0)
}

fn write_points(path: &Path, force: bool, contents: &str, n: usize) -> anyhow::Result<u8> {
    if path.exists() && !force {
        bail!(
            "{} already exists; pass --force to overwrite",
            path.display()
        );
    }
    fs::write(path, contents).with_context(|| format!("cannot write {}", path.display()))?;
    println!("wrote {n} points to {}", path.display());
    Ok(0)
}

fn run_gen(family: GenFamily) -> anyhow::Result<u8> {
    match family {
        GenFamily::Star { lines, out, force } => {
            let cfg = star_configuration::<Rational>(lines, None)?;
            write_points(&out, force, &format_points(&cfg), cfg.len())
        }
        GenFamily::Random {
            count,
            seed,
            out,
            force,
        } => {
            let cfg = random_rational_config(count, seed)?;
            write_points(&out, force, &format_points(&cfg), cfg.len())
        }
        GenFamily::Hesse { out, force } => {
            let cfg = sympow_core::points::dual_hesse_config();
            write_points(&out, force, &format_points(&cfg), cfg.len())
        }
    }
}
