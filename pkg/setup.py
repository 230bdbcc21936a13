import setuptools

metadata = \
    dict(
        name='scikit-phase',
        version='0.1.0',
        author='cmb',
        author_email='nope',
        description='geometric phase of an atom coupled to vacuum fluctuations near a conducting plate',
        long_description='',
        zip_safe=False,
        packages=setuptools.find_packages(exclude=['tests', 'tests.*']),
        python_requires='>=3.7',
        install_requires=['numpy',
                          'pint',
                          'scipy>=1.6',
                          'scikit-learn>=0.21',
                          'mpmath',
                          ],
        entry_points={
            'console_scripts': ['skphase = skphase.cli.__main__:main'],
        },
    )


if __name__ == '__main__':
    setuptools.setup(**metadata)
