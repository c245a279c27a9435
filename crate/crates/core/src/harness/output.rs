//! Writers for the artifact directory:
//!
//! ```text
//! tables/table{2..5}_{unweighted,weighted}.csv
//! null/{graph}_{l}_{r}.csv
//! null/{graph}_{l}_{r}_percentiles.csv
//! null/{graph}_{l}_{r}_histogram.csv   (and .svg on request)
//! cases/case{1..4}.csv
//! ```

use std::fs;
use std::path::{Path, PathBuf};

use crate::metrics::QUALITY_CSV_HEADER;

use super::null_study::NullStudy;
use super::stress::{StressRow, StressScenario};
use super::HarnessError;

fn write(path: PathBuf, contents: &str) -> Result<PathBuf, HarnessError> {
    let io_err = |source| HarnessError::Io {
        path: path.display().to_string(),
        source,
    };
    if let Some(parent) = path.parent() {
        fs::create_dir_all(parent).map_err(io_err)?;
    }
    fs::write(&path, contents).map_err(io_err)?;
    Ok(path)
}

pub fn stress_table_path(root: &Path, scenario: &StressScenario) -> PathBuf {
    let mode = if scenario.weighted { "weighted" } else { "unweighted" };
    root.join("tables")
        .join(format!("table{}_{mode}.csv", scenario.axis.table()))
}

pub fn stress_csv(rows: &[StressRow]) -> String {
    let mut s = format!("{QUALITY_CSV_HEADER}\n");
    for r in rows {
        s += &r.csv_row();
        s.push('\n');
    }
    s
}

pub fn write_stress_table(
    root: &Path,
    scenario: &StressScenario,
    rows: &[StressRow],
) -> Result<PathBuf, HarnessError> {
    write(stress_table_path(root, scenario), &stress_csv(rows))
}

/// Writes draws, percentile pairs and histogram; returns the paths written.
pub fn write_null_study(root: &Path, study: &NullStudy, svg: bool) -> Result<Vec<PathBuf>, HarnessError> {
    let dir = root.join("null");
    let stem = study.stem();
    let mut paths = vec![
        write(dir.join(format!("{stem}.csv")), &study.sample.to_csv())?,
        write(dir.join(format!("{stem}_percentiles.csv")), &study.percentiles_csv())?,
        write(dir.join(format!("{stem}_histogram.csv")), &study.histogram.to_csv())?,
    ];
    if svg {
        let title = format!("gamma under the null: {stem}");
        paths.push(write(dir.join(format!("{stem}_histogram.svg")), &study.histogram.to_svg(&title))?);
    }
    Ok(paths)
}

pub fn write_case(root: &Path, case: u8, csv: &str) -> Result<PathBuf, HarnessError> {
    write(root.join("cases").join(format!("case{case}.csv")), csv)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::harness::StressAxis;

    #[test]
    fn layout() {
        let s = StressScenario::new(StressAxis::IntraVariesInter100, true, 0);
        assert_eq!(
            stress_table_path(Path::new("out"), &s),
            Path::new("out/tables/table4_weighted.csv")
        );
        assert_eq!(stress_csv(&[]), format!("{QUALITY_CSV_HEADER}\n"));
    }
}
