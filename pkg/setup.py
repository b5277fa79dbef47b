"""Build the optional compiled kernel extension.

The package works without it (a pure-Python fallback is selected at import
time), so a missing Cython toolchain only costs speed, not functionality.
"""
from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    ext_modules = cythonize(
        [
            Extension(
                "redtype._ckernels",
                ["src/redtype/_ckernels.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
