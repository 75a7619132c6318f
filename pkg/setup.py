"""Builds the optional compiled kernel extension.

The package is fully functional without it: zonalg._backend falls back to
the numpy implementation when the extension is absent.
"""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/zonalg/_kernels.pyx"],
        compiler_directives={"language_level": "3"},
    )
except Exception as exc:  # pragma: no cover - build-env dependent
    print(f"zonalg: skipping compiled kernels ({exc}); pure-python fallback will be used")

setup(ext_modules=ext_modules)
