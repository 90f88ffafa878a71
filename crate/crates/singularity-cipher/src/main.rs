use std::path::PathBuf;
use std::process::exit;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};
use singularity_cipher::cli::{self, CliConfig};

#[derive(Parser)]
#[command(
    name = "singcipher",
    version,
    about = "Per-symbol twist cipher rendered as a grid of missing-square illusion glyphs",
    after_help = "The output image is a plain SVG of triangles: a filled right triangle \
                  encodes a 0 bit, the five-piece missing-square arrangement encodes a 1 bit.\n\
                  There is no authentication tag: decrypting with the wrong passphrase \
                  silently yields wrong bytes. Key derivation is reproducibility-oriented, \
                  not hardened; do not protect real secrets with this tool."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Encrypt a file into a glyph-grid image
    Encrypt {
        /// Passphrase (falls back to the SINGCIPHER_KEY environment variable)
        #[arg(long = "key", env = "SINGCIPHER_KEY", hide_env_values = true)]
        key: Option<String>,
        /// Input file, read as raw bytes
        #[arg(long = "in", value_name = "PATH")]
        input: PathBuf,
        /// Output image path
        #[arg(long = "out", value_name = "PATH")]
        output: PathBuf,
        /// Grid width in cells
        #[arg(long, default_value_t = 16, value_parser = clap::value_parser!(u32).range(1..))]
        columns: u32,
        /// Chain mode: XOR-feed each ciphertext byte into the next symbol
        #[arg(long)]
        chain: bool,
    },
    /// Decrypt a glyph-grid image back into the original bytes
    Decrypt {
        /// Passphrase (falls back to the SINGCIPHER_KEY environment variable)
        #[arg(long = "key", env = "SINGCIPHER_KEY", hide_env_values = true)]
        key: Option<String>,
        /// Input image path
        #[arg(long = "in", value_name = "PATH")]
        input: PathBuf,
        /// Output file for the recovered bytes
        #[arg(long = "out", value_name = "PATH")]
        output: PathBuf,
        /// Chain mode; must match the flag used at encryption
        #[arg(long)]
        chain: bool,
    },
    /// Measure avalanche, ciphertext uniformity and the nominal key space
    Analyze {
        /// Passphrase to derive the measured key (a fixed default otherwise)
        #[arg(long = "key", env = "SINGCIPHER_KEY", hide_env_values = true)]
        key: Option<String>,
        /// Measure the chained mode instead of the per-symbol default
        #[arg(long)]
        chain: bool,
        /// Number of avalanche trials
        #[arg(long, default_value_t = 10_000, value_parser = clap::value_parser!(u64).range(1..))]
        trials: u64,
        /// Seed of the deterministic trial streams
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

fn main() {
    let parsed = Cli::try_parse().unwrap_or_else(|e| {
        let code = match e.kind() {
            ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => cli::EXIT_OK,
            _ => cli::EXIT_USAGE,
        };
        let _ = e.print();
        exit(code);
    });

    let code = match parsed.command {
        Command::Encrypt {
            key,
            input,
            output,
            columns,
            chain,
        } => cli::run_encrypt(&CliConfig {
            passphrase: key,
            input: Some(input),
            output: Some(output),
            columns: columns as usize,
            chain,
            ..CliConfig::default()
        }),
        Command::Decrypt {
            key,
            input,
            output,
            chain,
        } => cli::run_decrypt(&CliConfig {
            passphrase: key,
            input: Some(input),
            output: Some(output),
            chain,
            ..CliConfig::default()
        }),
        Command::Analyze {
            key,
            chain,
            trials,
            seed,
        } => cli::run_analyze(&CliConfig {
            passphrase: key,
            chain,
            trials,
            seed,
            ..CliConfig::default()
        }),
    };
    exit(code);
}
