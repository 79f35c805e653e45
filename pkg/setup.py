import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("PREFEXT_NO_EXT", "") in ("", "0"):
    try:
        from Cython.Build import cythonize
    except ImportError:
        cythonize = None
    if cythonize is not None:
        ext_modules = cythonize(
            [
                Extension(
                    "prefext._ckernel",
                    ["src/prefext/_ckernel.pyx"],
                    extra_compile_args=["-O3"],
                )
            ],
            compiler_directives={"language_level": "3", "boundscheck": False, "wraparound": False},
        )

setup(ext_modules=ext_modules)
