//! One function per subcommand. Each returns a report whose exit code
//! reflects the verdict.

use std::io::Read;

use effspec::{
    atoms, diagonal_similarity_witness, effective_radius, effective_spectrum, find_clans,
    is_completely_reducible, minimize_radius, partial_transpose, same_effective_family,
    signed_equality_check, Clan, EqualityVerdict, EtaVector, IndexSet, Matrix, Method, Outcome,
};

use crate::error::CliError;
use crate::format::{parse_list, parse_matrix, serialize_matrix};
use crate::report::{Field, Report};

/// Reads a matrix file; `-` means standard input.
pub fn load(path: &str) -> Result<Matrix, CliError> {
    let io = |source| CliError::Io {
        path: path.to_string(),
        source,
    };
    let text = if path == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(io)?;
        s
    } else {
        std::fs::read_to_string(path).map_err(io)?
    };
    parse_matrix(&text).map_err(|e| e.in_file(path))
}

fn eta_for(k: &Matrix, eta: Option<&str>) -> Result<EtaVector, CliError> {
    match eta {
        None => Ok(EtaVector::ones(k.dim())),
        Some(s) => {
            let values: Vec<f64> = parse_list(s, "eta")?;
            if values.len() != k.dim() {
                return Err(CliError::Usage(format!(
                    "--eta has {} components, matrix has dimension {}",
                    values.len(),
                    k.dim()
                )));
            }
            Ok(EtaVector::new(values)?)
        }
    }
}

pub fn radius(k: &Matrix, eta: Option<&str>) -> Result<Report, CliError> {
    let eta = eta_for(k, eta)?;
    let mut r = Report::new();
    r.push("radius", effective_radius(k, &eta)?);
    Ok(r)
}

pub fn spectrum(k: &Matrix, eta: Option<&str>) -> Result<Report, CliError> {
    let eta = eta_for(k, eta)?;
    let mut r = Report::new();
    for z in effective_spectrum(k, &eta)? {
        r.push(
            "eigenvalue",
            Field::List(vec![Field::Num(z.re), Field::Num(z.im)]),
        );
    }
    Ok(r)
}

fn method_name(m: Method) -> &'static str {
    match m {
        Method::PrincipalMinors => "principal-minors",
        Method::SignedPrincipalMinors => "signed-principal-minors",
        Method::SubmatrixSpectra => "submatrix-spectra",
    }
}

fn verdict_report(v: &EqualityVerdict) -> Report {
    let (name, code) = match v.outcome {
        Outcome::Equal => ("equal", 0),
        Outcome::NotEqual => ("not-equal", 1),
        Outcome::Inconclusive => ("inconclusive", 2),
    };
    let mut r = Report::new();
    r.push("outcome", name)
        .push("method", method_name(v.method));
    if let Some(w) = &v.witness {
        r.push("witness", w.to_string());
    }
    if let Some(p) = &v.failed_precondition {
        r.push("precondition", p.to_string());
    }
    r.push("max_discrepancy", v.max_discrepancy);
    r.exit(code)
}

pub fn compare(a: &Matrix, b: &Matrix, tol: f64, signed: bool) -> Result<Report, CliError> {
    let v = if signed {
        signed_equality_check(a, b, tol)?
    } else {
        same_effective_family(a, b, tol)?
    };
    Ok(verdict_report(&v))
}

pub fn minors(k: &Matrix) -> Result<Report, CliError> {
    let table = effspec::all_principal_minors(k)?;
    let mut r = Report::new();
    for (alpha, value) in table.iter() {
        r.push(alpha.to_string(), value);
    }
    Ok(r)
}

pub fn atoms_report(k: &Matrix) -> Result<Report, CliError> {
    let part = atoms(k);
    let mut r = Report::new();
    for block in part.blocks() {
        r.push("atom", block.to_string());
    }
    r.push("irreducible", part.len() == 1)
        .push("completely_reducible", is_completely_reducible(k));
    Ok(r)
}

pub fn clans(k: &Matrix, tol: f64) -> Result<Report, CliError> {
    let found = find_clans(k, tol)?;
    let mut r = Report::new();
    for clan in &found {
        r.push("clan", clan.alpha().to_string());
    }
    r.push("count", found.len());
    Ok(r)
}

fn parse_alpha(n: usize, spec: &str) -> Result<IndexSet, CliError> {
    let members: Vec<usize> = parse_list(spec, "alpha")?;
    if members.iter().any(|&i| i == 0 || i > n) {
        return Err(CliError::Usage(format!(
            "--alpha indices must lie in 1..={n}, got {spec}"
        )));
    }
    Ok(IndexSet::from_one_based(n, &members)?)
}

/// The transformed matrix in file format, ready for standard output.
pub fn partial_transpose_text(k: &Matrix, alpha: &str, tol: f64) -> Result<String, CliError> {
    let alpha = parse_alpha(k.dim(), alpha)?;
    let clan = Clan::new(k, alpha, tol)?;
    Ok(serialize_matrix(&partial_transpose(k, &clan)?))
}

pub fn diagsim(a: &Matrix, b: &Matrix, tol: f64) -> Result<Report, CliError> {
    let mut r = Report::new();
    match diagonal_similarity_witness(a, b, tol)? {
        Some(w) => {
            r.push("similar", true)
                .push(
                    "d",
                    Field::List(w.d.iter().map(|&x| Field::Num(x)).collect()),
                )
                .push("residual", w.residual);
            Ok(r)
        }
        None => {
            r.push("similar", false);
            Ok(r.exit(1))
        }
    }
}

pub fn minimize(k: &Matrix, budget: usize, tol: f64) -> Result<Report, CliError> {
    let best = minimize_radius(k, budget, tol)?;
    let mut r = Report::new();
    r.push("budget", best.budget).push("radius", best.radius);
    for alpha in &best.argmin {
        r.push("argmin", alpha.to_string());
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[f64]]) -> Matrix {
        Matrix::from_rows(rows).unwrap()
    }

    fn lines(r: &Report) -> String {
        r.render(false)
    }

    #[test]
    fn radius_examples() {
        let kt = m(&[&[1.0, -1.0], &[1.0, 1.0]]);
        assert_eq!(
            lines(&radius(&kt, Some("1,1")).unwrap()),
            "radius: 1.414213562373\n"
        );
        let id = effspec::Matrix::identity(3);
        assert_eq!(lines(&radius(&id, Some("0,0,0")).unwrap()), "radius: 0\n");
        assert_eq!(radius(&id, Some("1,1")).unwrap_err().exit_code(), 64);
        assert_eq!(radius(&id, Some("1,-1,1")).unwrap_err().exit_code(), 64);
        assert_eq!(radius(&id, Some("1,a,1")).unwrap_err().exit_code(), 64);
    }

    #[test]
    fn spectrum_example() {
        let k = m(&[&[0.0, 1.0], &[4.0, 0.0]]);
        assert_eq!(
            lines(&spectrum(&k, None).unwrap()),
            "eigenvalue: 2 0\neigenvalue: -2 0\n"
        );
    }

    #[test]
    fn minimize_examples() {
        let r = minimize(&Matrix::identity(3), 1, 1e-9).unwrap();
        assert_eq!(
            lines(&r),
            "budget: 1\nradius: 1\nargmin: {1}\nargmin: {2}\nargmin: {3}\n"
        );
        let swap = m(&[&[0.0, 1.0], &[1.0, 0.0]]);
        let r = minimize(&swap, 1, 1e-9).unwrap();
        assert_eq!(
            lines(&r),
            "budget: 1\nradius: 0\nargmin: {1}\nargmin: {2}\n"
        );
        assert_eq!(minimize(&swap, 3, 1e-9).unwrap_err().exit_code(), 64);
        let neg = m(&[&[0.0, -1.0], &[1.0, 0.0]]);
        assert_eq!(minimize(&neg, 1, 1e-9).unwrap_err().exit_code(), 65);
    }

    #[test]
    fn alpha_parsing() {
        assert_eq!(parse_alpha(4, "1,3").unwrap().to_vec(), vec![0, 2]);
        assert_eq!(parse_alpha(4, "0,3").unwrap_err().exit_code(), 64);
        assert_eq!(parse_alpha(4, "5").unwrap_err().exit_code(), 64);
    }
}
