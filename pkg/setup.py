import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("INDLAB_NO_EXT") != "1":
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "indlab._kernels._sweep",
                ["src/indlab/_kernels/_sweep.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
