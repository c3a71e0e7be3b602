//! Subcommand implementations.

use std::path::Path;

use skyseal_core::ascon::aead::{ASCON128, ASCON128A};
use skyseal_core::bench::{self, BenchConfig, TimingScope};
use skyseal_core::kat::{self, KatOutcome};
use skyseal_core::registry::{
    bench_targets, cipher_by_name, cipher_names, hash_by_name, hash_names, Nonce, SecretKey,
};
use skyseal_core::sim::{self, ScenarioConfig};

use crate::args::{
    BenchArgs, GenDatasetArgs, HashArgs, KatArgs, ReportFormat, SealArgs, SimulateArgs,
};
use crate::io_util::{credential_bytes, hex_bytes, read_input, want_hex, write_output, write_text};
use crate::{CliError, ExitCode};

fn usage(msg: String) -> CliError {
    CliError::new(ExitCode::Usage, msg)
}

fn parse_io(msg: String) -> CliError {
    CliError::new(ExitCode::ParseIo, msg)
}

fn seal_credentials(args: &SealArgs) -> Result<(SecretKey, Nonce, Vec<u8>), CliError> {
    let key_bytes = credential_bytes("key", &args.key)?;
    let key = SecretKey::from_slice(&key_bytes).map_err(|e| usage(format!("--key: {e}")))?;
    let nonce_bytes = credential_bytes("nonce", &args.nonce)?;
    let nonce = Nonce::from_slice(&nonce_bytes).map_err(|e| usage(format!("--nonce: {e}")))?;
    let ad = hex_bytes("ad", &args.ad)?;
    Ok((key, nonce, ad))
}

pub fn cmd_seal(args: &SealArgs) -> Result<(), CliError> {
    let cipher = cipher_by_name(&args.algorithm).ok_or_else(|| {
        usage(format!(
            "unknown algorithm `{}`; valid: {}",
            args.algorithm,
            cipher_names().join(", ")
        ))
    })?;
    let (key, nonce, ad) = seal_credentials(args)?;
    let plaintext = read_input(args.input.as_deref())?;
    let (mut wire, tag) = cipher
        .seal(&key, &nonce, &ad, &plaintext)
        .map_err(|e| usage(e.to_string()))?;
    wire.extend_from_slice(&tag);
    let as_hex = want_hex(args.format, args.output.as_ref());
    write_output(args.output.as_deref(), &wire, as_hex)
}

pub fn cmd_open(args: &SealArgs) -> Result<(), CliError> {
    let cipher = cipher_by_name(&args.algorithm).ok_or_else(|| {
        usage(format!(
            "unknown algorithm `{}`; valid: {}",
            args.algorithm,
            cipher_names().join(", ")
        ))
    })?;
    let (key, nonce, ad) = seal_credentials(args)?;
    let mut wire = read_input(args.input.as_deref())?;
    if args.format == crate::args::DataFormat::Hex {
        let text =
            String::from_utf8(wire).map_err(|_| parse_io("input is not utf-8 hex".into()))?;
        wire = hex::decode(text.trim()).map_err(|_| parse_io("input is not valid hex".into()))?;
    }
    if wire.len() < cipher.tag_len() {
        return Err(parse_io(format!(
            "input shorter than the {}-byte tag",
            cipher.tag_len()
        )));
    }
    let (ciphertext, tag) = wire.split_at(wire.len() - cipher.tag_len());
    // No output bytes are written unless the tag verifies.
    let plaintext = cipher
        .open(&key, &nonce, &ad, ciphertext, tag)
        .map_err(|_| CliError::new(ExitCode::AuthFailure, "authentication failed".into()))?;
    let as_hex = want_hex(crate::args::DataFormat::Auto, args.output.as_ref());
    write_output(args.output.as_deref(), &plaintext, as_hex)
}

pub fn cmd_hash(args: &HashArgs) -> Result<(), CliError> {
    let algo = hash_by_name(&args.algorithm).ok_or_else(|| {
        usage(format!(
            "unknown algorithm `{}`; valid: {}",
            args.algorithm,
            hash_names().join(", ")
        ))
    })?;
    let message = read_input(args.input.as_deref())?;
    let digest = if algo.is_xof() {
        let length = args
            .length
            .ok_or_else(|| usage(format!("--length is required for {}", algo.name())))?;
        algo.xof(&message, length)
            .map_err(|e| usage(format!("--length: {e}")))?
    } else {
        if args.length.is_some() {
            return Err(usage(format!(
                "{} has a fixed 32-byte digest; --length applies to the xof variants",
                algo.name()
            )));
        }
        algo.digest(&message).to_vec()
    };
    write_text(
        args.output.as_deref(),
        &format!("{}\n", hex::encode(digest)),
    )
}

fn load_kat_outcomes(args: &KatArgs) -> Result<Vec<KatOutcome>, CliError> {
    let path: &Path = &args.input;
    let read =
        || std::fs::read_to_string(path).map_err(|e| parse_io(format!("{}: {e}", path.display())));
    let outcomes = match args.algorithm.as_str() {
        "ascon128" | "ascon128a" => {
            let params = if args.algorithm == "ascon128" {
                &ASCON128
            } else {
                &ASCON128A
            };
            let records = kat::parse_aead(&read()?)
                .map_err(|e| parse_io(format!("{}: {e}", path.display())))?;
            kat::verify_aead(&records, params)
        }
        "asconhash" | "asconhasha" | "asconxof" | "asconxofa" => {
            let algo = hash_by_name(&args.algorithm).expect("matched above");
            let records = kat::parse_hash(&read()?)
                .map_err(|e| parse_io(format!("{}: {e}", path.display())))?;
            kat::verify_hash(&records, algo)
        }
        "aes128" => {
            let records = kat::parse_block(&read()?)
                .map_err(|e| parse_io(format!("{}: {e}", path.display())))?;
            kat::verify_block(&records)
        }
        other => {
            return Err(usage(format!(
                "unknown algorithm `{other}`; valid: ascon128, ascon128a, asconhash, \
                 asconhasha, asconxof, asconxofa, aes128"
            )))
        }
    };
    Ok(outcomes)
}

pub fn cmd_kat(args: &KatArgs) -> Result<(), CliError> {
    let outcomes = load_kat_outcomes(args)?;
    let mut failed = 0usize;
    for outcome in &outcomes {
        if !outcome.ok {
            failed += 1;
        }
        if !args.quiet {
            match &outcome.detail {
                Some(detail) => println!("Count = {}: FAIL ({detail})", outcome.count),
                None => println!("Count = {}: PASS", outcome.count),
            }
        }
    }
    println!(
        "{} records, {} passed, {} failed",
        outcomes.len(),
        outcomes.len() - failed,
        failed
    );
    if failed > 0 {
        return Err(CliError::new(
            ExitCode::AuthFailure,
            format!("{failed} known-answer records failed"),
        ));
    }
    Ok(())
}

pub fn cmd_bench(args: &BenchArgs) -> Result<(), CliError> {
    let dataset = bench::load_dataset(&args.dataset)
        .map_err(|e| parse_io(format!("{}: {e}", args.dataset.display())))?;
    let targets = if args.algorithms.is_empty() {
        bench_targets()
    } else {
        bench::resolve_targets(&args.algorithms).map_err(|e| usage(e.to_string()))?
    };
    if args.iterations == 0 {
        return Err(usage("--iterations must be at least 1".into()));
    }
    let config = BenchConfig {
        iterations: args.iterations,
        scope: if args.split {
            TimingScope::Split
        } else {
            TimingScope::Combined
        },
        seed: args.seed,
        dataset_source: args.dataset.display().to_string(),
    };
    let report =
        bench::run_benchmark(&dataset, &targets, &config).map_err(|e| parse_io(e.to_string()))?;
    let rendered = match args.format {
        ReportFormat::Table => report.to_table(),
        ReportFormat::Csv => report.to_csv(),
        ReportFormat::Jsonl => report.to_jsonl(),
    };
    write_text(args.output.as_deref(), &rendered)
}

pub fn cmd_simulate(args: &SimulateArgs) -> Result<(), CliError> {
    let mut config = match &args.config {
        Some(path) => ScenarioConfig::from_file(path)
            .map_err(|e| parse_io(format!("{}: {e}", path.display())))?,
        None => ScenarioConfig::default(),
    };
    if let Some(cipher) = &args.cipher {
        config.cipher = cipher.clone();
    }
    if let Some(packets) = args.packets {
        config.packets = packets;
    }
    if let Some(v) = args.payload_min {
        config.payload_min = v;
    }
    if let Some(v) = args.payload_max {
        config.payload_max = v;
    }
    if let Some(v) = args.loss_p {
        config.loss_p = v;
    }
    if let Some(v) = args.corrupt_q {
        config.corrupt_q = v;
    }
    if let Some(v) = args.reorder {
        config.reorder = v;
    }
    if let Some(v) = args.seed {
        config.seed = v;
    }
    if let Some(key) = &args.key {
        let bytes = credential_bytes("key", key)?;
        config.key = SecretKey::from_slice(&bytes).map_err(|e| usage(format!("--key: {e}")))?;
    }
    config.validate().map_err(|e| usage(e.to_string()))?;

    let stats = match &args.trace {
        Some(path) => {
            let mut file = std::fs::File::create(path)
                .map_err(|e| parse_io(format!("{}: {e}", path.display())))?;
            sim::run_scenario_with_trace(&config, Some(&mut file))
                .map_err(|e| parse_io(e.to_string()))?
        }
        None => sim::run_scenario(&config).map_err(|e| parse_io(e.to_string()))?,
    };

    let c = stats.counts;
    println!(
        "cipher: {} ({})",
        config.cipher,
        if stats.unauthenticated {
            "unauthenticated"
        } else {
            "authenticated"
        }
    );
    println!("sent:              {}", c.sent);
    println!("delivered:         {}", c.delivered);
    println!("delivered corrupt: {}", c.delivered_corrupt);
    println!("lost:              {}", c.lost);
    println!("auth failed:       {}", c.auth_failed);
    println!("replayed:          {}", c.replayed);
    println!("accepted bytes:    {}", c.accepted_payload_bytes);
    if let Some(mean) = stats.mean_latency_s() {
        println!("mean latency_s:    {mean:.9}");
    }
    println!("goodput_Bps:       {:.1}", stats.goodput_bps);
    Ok(())
}

pub fn cmd_gen_dataset(args: &GenDatasetArgs) -> Result<(), CliError> {
    if args.count == 0 {
        return Err(usage("--count must be at least 1".into()));
    }
    if args.min_size == 0 || args.min_size > args.max_size {
        return Err(usage("sizes must satisfy 1 <= min-size <= max-size".into()));
    }
    let entries = bench::generate_dataset(args.count, args.min_size, args.max_size, args.seed);
    let header = format!(
        "count={} min={} max={} seed={}",
        args.count, args.min_size, args.max_size, args.seed
    );
    write_text(
        args.output.as_deref(),
        &bench::render_dataset(&entries, Some(&header)),
    )
}
