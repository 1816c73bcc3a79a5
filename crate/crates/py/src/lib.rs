use pyo3::prelude::*;

#[pymodule]
fn splitjac_py(_m: &Bound<'_, PyModule>) -> PyResult<()> {
    Ok(())
}
