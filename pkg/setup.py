import os

from setuptools import setup

ext_modules = []
if os.environ.get("ASCSEQ_NO_EXT", "") in ("", "0"):
    try:
        from Cython.Build import cythonize
    except ImportError:
        pass
    else:
        ext_modules = cythonize(
            ["src/ascseq/_kernel_c.pyx"],
            compiler_directives={"language_level": "3"},
        )

setup(ext_modules=ext_modules)
