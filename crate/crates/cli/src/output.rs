use std::fs;
use std::io::{self, Read, Write};
use std::path::Path;

use tempfile::NamedTempFile;

use crate::error::CliError;

/// Reads a whole input, where `-` is standard input.
pub fn read_input(path: &str) -> Result<Vec<u8>, CliError> {
    let mut buf = Vec::new();
    if path == "-" {
        io::stdin().read_to_end(&mut buf).map_err(|e| CliError::io("reading standard input", e))?;
    } else {
        buf = fs::read(path).map_err(|e| CliError::io(&format!("reading '{path}'"), e))?;
    }
    Ok(buf)
}

/// Writes `contents` to `path`, or to standard output for `-`.
///
/// Files are written to a temporary sibling and renamed into place, so a
/// failed run never leaves a partial file behind.
pub fn write_output(path: &str, contents: &[u8]) -> Result<(), CliError> {
    if path == "-" {
        let mut out = io::stdout().lock();
        return out
            .write_all(contents)
            .and_then(|_| out.flush())
            .map_err(|e| CliError::io("writing standard output", e));
    }
    let target = Path::new(path);
    let dir = match target.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    let context = format!("writing '{path}'");
    let mut tmp = NamedTempFile::new_in(dir).map_err(|e| CliError::io(&context, e))?;
    tmp.write_all(contents).map_err(|e| CliError::io(&context, e))?;
    tmp.as_file().sync_all().map_err(|e| CliError::io(&context, e))?;
    #[cfg(unix)]
    {
        use std::os::unix::fs::PermissionsExt;
        // Temporary files are created owner-only.
        tmp.as_file()
            .set_permissions(fs::Permissions::from_mode(0o644))
            .map_err(|e| CliError::io(&context, e))?;
    }
    tmp.persist(target).map_err(|e| CliError::io(&context, e.error))?;
    Ok(())
}
