"""Build script for the optional compiled search kernels.

The package works without the extension; cupstack._backend falls back to the
pure-Python kernels when cupstack._speedups is missing.
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
                "cupstack._speedups",
                ["src/cupstack/_speedups.pyx"],
                extra_compile_args=["-O3"],
                optional=True,
            )
        ],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
