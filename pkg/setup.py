from Cython.Build import cythonize
from setuptools import Extension, setup

setup(
    ext_modules=cythonize(
        [
            Extension(
                "trigideal._kernel.kernel_cy",
                ["src/trigideal/_kernel/kernel_cy.pyx"],
            )
        ],
        language_level=3,
    )
)
