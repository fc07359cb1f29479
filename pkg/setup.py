import os

from setuptools import Extension, setup

ext_modules = []
if not os.environ.get("POTTS_SKIP_EXT"):
    try:
        from Cython.Build import cythonize
    except ImportError:
        cythonize = None
    if cythonize is not None:
        ext_modules = cythonize(
            [
                Extension(
                    "pottsmotive._countcore",
                    ["src/pottsmotive/_countcore.pyx"],
                    extra_compile_args=["-O3"],
                    optional=True,
                )
            ],
            language_level="3",
        )

setup(ext_modules=ext_modules)
