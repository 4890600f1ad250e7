import os

from setuptools import setup

ext_modules = []
if os.environ.get("IRREG_NO_EXT", "") in ("", "0"):
    try:
        from Cython.Build import cythonize
        from setuptools import Extension

        ext_modules = cythonize(
            [Extension("irreg.kernels._ckernels", ["src/irreg/kernels/_ckernels.pyx"], extra_compile_args=["-O3"])],
            language_level=3,
        )
    except ImportError:
        # no Cython: the pure-Python kernels are used
        ext_modules = []

setup(ext_modules=ext_modules)
