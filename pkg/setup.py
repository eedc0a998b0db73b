"""Build script for the optional compiled kernel extension.

The package is fully functional without the extension (a pure-Python twin of
every kernel ships in frozone._kernels.pure); building it just makes the
scenario simulations and benchmarks run orders of magnitude faster.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:  # plain install without Cython: pure backend only
    ext_modules = []
else:
    ext_modules = cythonize(
        [
            Extension(
                "frozone._kernels._native",
                ["src/frozone/_kernels/_native.pyx"],
                # -ffp-contract=off keeps C arithmetic bit-identical to the
                # pure-Python twin (no FMA fusion), which the kernel parity
                # tests assert exactly.
                extra_compile_args=["-O3", "-ffp-contract=off"],
            )
        ],
        compiler_directives={
            "language_level": "3",
            "boundscheck": False,
            "wraparound": False,
            "cdivision": True,
        },
    )

setup(ext_modules=ext_modules)
