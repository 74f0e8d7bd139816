//! Degree-list arguments.

use poincare::DegreeList;

use crate::error::CliError;

/// Upper limit on a single degree accepted from the command line.
pub const MAX_DEGREE: u32 = 64;

/// Parses degree arguments: positive integers, each at most
/// [`MAX_DEGREE`].
pub fn parse_degrees<S: AsRef<str>>(args: &[S]) -> Result<DegreeList, CliError> {
    if args.is_empty() {
        return Err(CliError::Usage("at least one degree is required".into()));
    }
    let mut out = Vec::with_capacity(args.len());
    for a in args {
        let a = a.as_ref().trim();
        let d: i64 = a
            .parse()
            .map_err(|_| CliError::Usage(format!("degree `{a}` is not an integer")))?;
        if d < 1 {
            return Err(CliError::Usage(format!("degree {d} is not positive")));
        }
        if d > MAX_DEGREE as i64 {
            return Err(CliError::Usage(format!(
                "degree {d} exceeds the supported maximum {MAX_DEGREE}"
            )));
        }
        out.push(d as u32);
    }
    DegreeList::new(out).map_err(|e| CliError::Usage(e.to_string()))
}
