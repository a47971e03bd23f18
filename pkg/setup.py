import sys

from setuptools import setup

# The compiled closure kernel is optional: bondperc.percolation falls back to
# the pure-Python kernels if the extension is absent.
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/bondperc/_closure.pyx"],
        compiler_directives={"language_level": "3"},
    )
except Exception as exc:  # pragma: no cover - build environment dependent
    print(f"bondperc: skipping compiled closure kernel ({exc})", file=sys.stderr)
    ext_modules = []

setup(ext_modules=ext_modules)
