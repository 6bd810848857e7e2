"""Build the optional compiled quadrature core.

The package works without it (pure-Python fallback); a failed or skipped
build only costs speed.
"""
import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("HURWITZ_INTEGRALS_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize
    except ImportError:
        cythonize = None
    if cythonize is not None:
        ext_modules = cythonize(
            [
                Extension(
                    "hurwitz_integrals._quadcore",
                    ["src/hurwitz_integrals/_quadcore.pyx"],
                    extra_compile_args=["-O3"],
                    libraries=["m"],
                )
            ],
            compiler_directives={"language_level": "3"},
        )

setup(ext_modules=ext_modules)
