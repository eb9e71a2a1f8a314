""" PIP module declaration for ramanujan-psi """

from setuptools import setup, find_packages

setup(
    name='ramanujan-psi',

    version='0.1.0',

    description='Ramanujan\'s rapidly convergent formula for the digamma function, '
                'with classical oracles and a convergence benchmark.',
    long_description="""Ramanujan-psi evaluates psi(x+1) by Ramanujan's formula and its corollaries.

Besides the digamma function it computes Euler's constant at integer and
non-integer arguments, zeta at the odd integers, the hyperbolic and Lambert
sum identities, and cross-checks every result against independent classical
oracles. A tolerance-driven planner chooses the number of terms and every
value carries a rigorous truncation-error estimate.""",

    author='Frank Wittig',
    author_email='frank@e5k.de',

    license='Apache License, Version 2.0',

    classifiers=[
        'Development Status :: 4 - Beta',

        'Environment :: Console',

        'Intended Audience :: Science/Research',
        'Intended Audience :: Education',

        'License :: OSI Approved :: Apache Software License',

        'Operating System :: MacOS :: MacOS X',
        'Operating System :: POSIX',
        'Operating System :: Unix',

        'Programming Language :: Python :: 3',
        'Programming Language :: Python :: 3.8',
        'Programming Language :: Python :: 3.9',
        'Programming Language :: Python :: 3.10',
        'Programming Language :: Python :: 3.11',

        'Topic :: Scientific/Engineering :: Mathematics',
        'Topic :: Utilities'
    ],

    keywords='digamma euler-gamma zeta bernoulli special-functions',

    packages=find_packages('src'),
    package_dir={'': 'src'},

    python_requires='>=3.8',

    entry_points={
        'console_scripts': [
            'ramanujan=ramanujan_psi:main'
        ]
    },

    install_requires=(
        'mpmath',
        'numpy',
        'ruamel.yaml',
        'tabulate',
    ),

    extras_require={
        'test': (
            'hypothesis',
            'pytest',
        )
    }
)
