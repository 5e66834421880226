"""Build script: compiles the optional exponential-sum extension.

The package works without the extension (a numpy fallback is selected at
import time); building it just makes the modular-arithmetic kernels faster.
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
                "qvar.expsum._core",
                ["src/qvar/expsum/_core.pyx"],
            )
        ],
        language_level="3",
    )

setup(ext_modules=ext_modules)
