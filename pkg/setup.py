"""Build script for the optional compiled path kernels.

The package works without the extension (``langlie.kernels`` falls back to
the pure-Python implementation); set LANGLIE_SKIP_EXT=1 to skip compilation
explicitly.
"""

import os

from setuptools import Extension, setup


def _extensions():
    if os.environ.get("LANGLIE_SKIP_EXT") == "1":
        return []
    try:
        from Cython.Build import cythonize
    except ImportError:
        return []
    ext = Extension(
        "langlie._kernels",
        ["src/langlie/_kernels.pyx"],
        extra_compile_args=["-O3"],
    )
    return cythonize([ext], compiler_directives={"language_level": "3"})


setup(ext_modules=_extensions())
