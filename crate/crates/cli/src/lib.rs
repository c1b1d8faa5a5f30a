//! Library side of the `palstream` command: stream driving, verification,
//! input generation and parameter sweeps.

pub mod bench;
pub mod error;
pub mod run;

pub use error::CliError;
pub use run::{run, verify, Mode, RunConfig, RunReport, Runner};

use palstream::{GenKind, GenSpec};

/// Generated symbols as bytes: `0`/`1` digits for the padding string,
/// lowercase letters for alphabets of at most 26 symbols, raw bytes above.
pub fn generate_bytes(spec: &GenSpec) -> Result<Vec<u8>, CliError> {
    if spec.kind != GenKind::Nu && spec.sigma > 256 {
        return Err(CliError::Usage(format!(
            "sigma {} does not fit in a byte alphabet",
            spec.sigma
        )));
    }
    let symbols = spec.generate()?;
    let offset = match spec.kind {
        GenKind::Nu => b'0',
        _ if spec.sigma <= 26 => b'a',
        _ => 0,
    };
    Ok(symbols.into_iter().map(|a| offset + a as u8).collect())
}
