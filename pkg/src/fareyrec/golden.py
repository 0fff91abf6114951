"""Reference tables for the character and Riley polynomials.

Golden data for the verification suites: character polynomials for
denominators up to 18 and Riley polynomials up to denominator 20, on
[0, 1/2].  Entries are kept in their published factored form and are
expanded by the polynomial parser at check time.
"""

CHAR_TABLE = [
    ('1/3', 'X - 1'),
    ('1/4', 'X - 2'),
    ('1/5', 'X^2 - 3 X + 1'),
    ('2/5', 'X Z - Z - 1'),
    ('1/6', '(X - 1) (X - 3)'),
    ('1/7', 'X^3 - 5 X^2 + 6 X - 1'),
    ('2/7', 'X^2 Z - 3 X Z + 2 Z - 1'),
    ('3/7', 'X^2 Z - X Z - 2 X + 1'),
    ('1/8', '(X^2 - 4 X + 2) (X - 2)'),
    ('3/8', 'X^2 Z - 2 X Z - X + Z'),
    ('1/9', '(X^3 - 6 X^2 + 9 X - 1) (X - 1)'),
    ('2/9', 'X^3 Z - 5 X^2 Z + 7 X Z - 2 Z - 1'),
    ('4/9', 'X^2 Z^2 - X Z^2 - 3 X Z + 2 Z + 1'),
    ('1/10', '(X^2 - 3X + 1)(X^2 - 5X + 5)'),
    ('3/10', 'X^3Z - 4X^2Z + 5XZ - 2X - 2Z + 3'),
    ('1/11', 'X^5 - 9X^4 + 28X^3 - 35X^2 + 15X - 1'),
    ('2/11', 'X^4Z - 7X^3Z + 16X^2Z - 13XZ + 3Z - 1'),
    ('3/11', 'X^4Z - 5X^3Z + 8X^2Z - X^2 - 4XZ + X + 1'),
    ('4/11', 'X^3Z^2 - 3X^2Z^2 - X^2Z + 3XZ^2 - Z^2 + Z + 1'),
    ('5/11', 'X^3Z^2 - X^2Z^2 - 4X^2Z + 3XZ + 3X - 1'),
    ('1/12', '(X^2 - 4X + 1)(X - 1)(X - 2)(X - 3)'),
    ('5/12', '(XZ - Z - 2)(XZ - 1)(X - 1)'),
    ('1/13', 'X^6 - 11X^5 + 45X^4 - 84X^3 + 70X^2 - 21X + 1'),
    ('2/13', 'X^5Z - 9X^4Z + 29X^3Z - 40X^2Z + 22XZ - 3Z - 1'),
    ('3/13', 'X^5Z - 7X^4Z + 17X^3Z - 16X^2Z - 2X^2 + 4XZ + 5X - 1'),
    ('4/13', 'X^4Z^2 - 5X^3Z^2 + 9X^2Z^2 - 3X^2Z - 7XZ^2 + 8XZ + 2Z^2 - 5Z + 1'),
    ('5/13', 'X^4Z^2 - 3X^3Z^2 - 2X^3Z + 3X^2Z^2 + 3X^2Z - XZ^2 + X^2 - XZ - X + 1'),
    ('6/13', 'X^3Z^3 - X^2Z^3 - 5X^2Z^2 + 4XZ^2 + 6XZ - 3Z - 1'),
    ('1/14', '(X^3 - 5X^2 + 6X - 1)(X^3 - 7X^2 + 14X - 7)'),
    ('3/14', 'X^5Z - 8X^4Z + 23X^3Z - 28X^2Z - X^2 + 13XZ + 2X - 2Z + 1'),
    ('5/14', 'X^4Z^2 - 4X^3Z^2 - X^3Z + 6X^2Z^2 - 4XZ^2 + 3XZ + Z^2 + 2X - 2Z - 1'),
    ('1/15', '(X^4 - 9X^3 + 26X^2 - 24X + 1)(X^2 - 3X + 1)(X - 1)'),
    ('2/15', 'X^6Z - 11X^5Z + 46X^4Z - 91X^3Z + 86X^2Z - 34XZ + 4Z - 1'),
    ('4/15', '(X^3Z - 3X^2Z + 2XZ - 1)(X^2Z - 4XZ + 4Z - 1)'),
    ('7/15', 'X^4Z^3 - X^3Z^3 - 6X^3Z^2 + 5X^2Z^2 + 10X^2Z - 6XZ - 4X + 1'),
    ('1/16', '(X^4 - 8X^3 + 20X^2 - 16X + 2)(X^2 - 4X + 2)(X - 2)'),
    ('3/16', 'X^6Z - 10X^5Z + 38X^4Z - 68X^3Z + 58X^2Z - 2X^2 - 22XZ + 7X + 3Z - 4'),
    ('5/16', 'X^5Z^2 - 6X^4Z^2 + 14X^3Z^2 - 4X^3Z - 16X^2Z^2 + 15X^2Z + 9XZ^2 - 18XZ - 2Z^2 + 3X + 7Z - 4'),
    ('7/16', '(X^3Z^2 - 2X^2Z^2 - 3X^2Z + XZ^2 + 4XZ + X - Z)(XZ - 2)'),
    ('1/17', 'X^8 - 15X^7 + 91X^6 - 286X^5 + 495X^4 - 462X^3 + 210X^2 - 36X + 1'),
    ('2/17', 'X^7Z - 13X^6Z + 67X^5Z - 174X^4Z + 239X^3Z - 166X^2Z + 50XZ - 4Z - 1'),
    ('3/17', 'X^7Z - 11X^6Z + 47X^5Z - 98X^4Z + 103X^3Z - X^3 - 51X^2Z + 3X^2 + 9XZ - 1'),
    ('4/17', 'X^6Z^2 - 9X^5Z^2 + 31X^4Z^2 - 50X^3Z^2 - 3X^3Z + 36X^2Z^2 + 14X^2Z - 8XZ^2 - 18XZ + 4Z + 1'),
    ('5/17', 'X^6Z^2 - 7X^5Z^2 + 19X^4Z^2 - 3X^4Z - 25X^3Z^2 + 13X^3Z + 16X^2Z^2 - 18X^2Z - 4XZ^2 + 2X^2 + 8XZ - 4X + 1'),
    ('6/17', 'X^5Z^3 - 5X^4Z^3 - X^4Z^2 + 10X^3Z^3 - 10X^2Z^3 + 6X^2Z^2 + 5XZ^3 + 3X^2Z - 8XZ^2 - Z^3 - 3XZ + 3Z^2 - 1'),
    ('7/17', 'X^5Z^3 - 3X^4Z^3 - 4X^4Z^2 + 3X^3Z^3 + 9X^3Z^2 - X^2Z^3 + 5X^3Z - 6X^2Z^2 - 9X^2Z + XZ^2 - 2X^2 + 4XZ + 4X - 1'),
    ('8/17', 'X^4Z^4 - X^3Z^4 - 7X^3Z^3 + 6X^2Z^3 + 15X^2Z^2 - 10XZ^2 - 10XZ + 4Z + 1'),
    ('1/18', '(X^3 - 6X^2 + 9X - 1)(X^3 - 6X^2 + 9X - 3)(X - 1)(X - 3)'),
    ('5/18', '(X^5Z^2 - 7X^4Z^2 + 18X^3Z^2 - 2X^3Z - 20X^2Z^2 + 7X^2Z + 8XZ^2 - 5XZ + X - 2Z - 1)(X - 1)'),
    ('7/18', '(X^4Z^3 - 3X^3Z^3 - 3X^3Z^2 + 3X^2Z^3 + 5X^2Z^2 - XZ^3 + 3X^2Z - 2XZ^2 - 3XZ - X + 2Z + 1)(X - 1)'),
]

RILEY_TABLE = [
    ('1/3', 'X - 1'),
    ('1/4', 'X - 2'),
    ('1/5', 'X^2 - 3 X + 1'),
    ('2/5', '-X^2 + X - 1'),
    ('1/6', '(X - 1) (X - 3)'),
    ('1/7', 'X^3 - 5 X^2 + 6 X - 1'),
    ('2/7', '-X^3 + 3 X^2 - 2 X - 1'),
    ('3/7', '-X^3 + X^2 - 2 X + 1'),
    ('1/8', '(X^2 - 4 X + 2) (X - 2)'),
    ('3/8', '-(X^2 - 2 X + 2) X'),
    ('1/9', '(X^3 - 6 X^2 + 9 X - 1) (X - 1)'),
    ('2/9', '-X^4 + 5 X^3 - 7 X^2 + 2 X - 1'),
    ('4/9', 'X^4 - X^3 + 3 X^2 - 2 X + 1'),
    ('1/10', '(X^2 - 3 X + 1) (X^2 - 5 X + 5)'),
    ('3/10', '-(X^2 - X - 1) (X^2 - 3 X + 3)'),
    ('1/11', 'X^5 - 9 X^4 + 28 X^3 - 35 X^2 + 15 X - 1'),
    ('2/11', '-X^5 + 7 X^4 - 16 X^3 + 13 X^2 - 3 X - 1'),
    ('3/11', '-X^5 + 5 X^4 - 8 X^3 + 3 X^2 + X + 1'),
    ('4/11', 'X^5 - 3 X^4 + 4 X^3 - X^2 - X + 1'),
    ('5/11', 'X^5 - X^4 + 4 X^3 - 3 X^2 + 3 X - 1'),
    ('1/12', '(X^2 - 4 X + 1) (X - 1) (X - 2) (X - 3)'),
    ('5/12', '(X^2 - X + 2) (X^2 + 1) (X - 1)'),
    ('1/13', 'X^6 - 11 X^5 + 45 X^4 - 84 X^3 + 70 X^2 - 21 X + 1'),
    ('2/13', '-X^6 + 9 X^5 - 29 X^4 + 40 X^3 - 22 X^2 + 3 X - 1'),
    ('3/13', '-X^6 + 7 X^5 - 17 X^4 + 16 X^3 - 6 X^2 + 5 X - 1'),
    ('4/13', 'X^6 - 5 X^5 + 9 X^4 - 4 X^3 - 6 X^2 + 5 X + 1'),
    ('5/13', 'X^6 - 3 X^5 + 5 X^4 - 4 X^3 + 2 X^2 - X + 1'),
    ('6/13', '-X^6 + X^5 - 5 X^4 + 4 X^3 - 6 X^2 + 3 X - 1'),
    ('1/14', '(X^3 - 5 X^2 + 6 X - 1) (X^3 - 7 X^2 + 14 X - 7)'),
    ('3/14', '-(X^3 - 3 X^2 + 2 X - 1) (X^3 - 5 X^2 + 6 X + 1)'),
    ('5/14', '(X^3 - X^2 + 1) (X^3 - 3 X^2 + 4 X - 1)'),
    ('1/15', '(X^4 - 9 X^3 + 26 X^2 - 24 X + 1) (X^2 - 3 X + 1) (X - 1)'),
    ('2/15', '-X^7 + 11 X^6 - 46 X^5 + 91 X^4 - 86 X^3 + 34 X^2 - 4 X - 1'),
    ('4/15', '(X^4 - 3 X^3 + 2 X^2 + 1) (X^3 - 4 X^2 + 4 X + 1)'),
    ('7/15', '-X^7 + X^6 - 6 X^5 + 5 X^4 - 10 X^3 + 6 X^2 - 4 X + 1'),
    ('1/16', '(X^4 - 8 X^3 + 20 X^2 - 16 X + 2) (X^2 - 4 X + 2) (X - 2)'),
    ('3/16', '-(X^4 - 6 X^3 + 10 X^2 - 2 X - 2) (X^3 - 4 X^2 + 4 X - 2)'),
    ('5/16', '(X^4 - 4 X^3 + 6 X^2 - 2 X - 2) (X^3 - 2 X^2 + 2)'),
    ('7/16', '-(X^4 - 2 X^3 + 4 X^2 - 4 X + 2) (X^2 + 2) X'),
    ('1/17', 'X^8 - 15 X^7 + 91 X^6 - 286 X^5 + 495 X^4 - 462 X^3 + 210 X^2 - 36 X + 1'),
    ('2/17', '-X^8 + 13 X^7 - 67 X^6 + 174 X^5 - 239 X^4 + 166 X^3 - 50 X^2 + 4 X - 1'),
    ('3/17', '-X^8 + 11 X^7 - 47 X^6 + 98 X^5 - 103 X^4 + 50 X^3 - 6 X^2 - 1'),
    ('4/17', 'X^8 - 9 X^7 + 31 X^6 - 50 X^5 + 39 X^4 - 22 X^3 + 18 X^2 - 4 X + 1'),
    ('5/17', 'X^8 - 7 X^7 + 19 X^6 - 22 X^5 + 3 X^4 + 14 X^3 - 6 X^2 - 4 X + 1'),
    ('6/17', '-X^8 + 5 X^7 - 11 X^6 + 10 X^5 + X^4 - 10 X^3 + 6 X^2 - 1'),
    ('7/17', '-X^8 + 3 X^7 - 7 X^6 + 10 X^5 - 11 X^4 + 10 X^3 - 6 X^2 + 4 X - 1'),
    ('8/17', 'X^8 - X^7 + 7 X^6 - 6 X^5 + 15 X^4 - 10 X^3 + 10 X^2 - 4 X + 1'),
    ('1/18', '(X^3 - 6 X^2 + 9 X - 1) (X^3 - 6 X^2 + 9 X - 3) (X - 1) (X - 3)'),
    ('5/18', '(X^4 - 3 X^3 + X^2 + 2 X + 1) (X^3 - 4 X^2 + 5 X - 1) (X - 1)'),
    ('7/18', '-(X^4 - X^3 + X^2 + 1) (X^3 - 2 X^2 + 3 X - 1) (X - 1)'),
    ('1/19', 'X^9 - 17 X^8 + 120 X^7 - 455 X^6 + 1001 X^5 - 1287 X^4 + 924 X^3 - 330 X^2 + 45 X - 1'),
    ('2/19', '-X^9 + 15 X^8 - 92 X^7 + 297 X^6 - 541 X^5 + 553 X^4 - 296 X^3 + 70 X^2 - 5 X - 1'),
    ('3/19', '-X^9 + 13 X^8 - 68 X^7 + 183 X^6 - 269 X^5 + 211 X^4 - 80 X^3 + 18 X^2 - 9 X + 1'),
    ('4/19', 'X^9 - 11 X^8 + 48 X^7 - 105 X^6 + 121 X^5 - 73 X^4 + 20 X^3 + 6 X^2 - 3 X + 1'),
    ('5/19', 'X^9 - 9 X^8 + 32 X^7 - 55 X^6 + 45 X^5 - 19 X^4 + 16 X^3 - 10 X^2 - 3 X - 1'),
    ('6/19', '-X^9 + 7 X^8 - 20 X^7 + 25 X^6 - X^5 - 31 X^4 + 24 X^3 + 6 X^2 - 9 X - 1'),
    ('7/19', '-X^9 + 5 X^8 - 12 X^7 + 15 X^6 - 9 X^5 - X^4 + 4 X^3 - 2 X^2 - X + 1'),
    ('8/19', 'X^9 - 3 X^8 + 8 X^7 - 13 X^6 + 17 X^5 - 17 X^4 + 12 X^3 - 6 X^2 + X + 1'),
    ('9/19', 'X^9 - X^8 + 8 X^7 - 7 X^6 + 21 X^5 - 15 X^4 + 20 X^3 - 10 X^2 + 5 X - 1'),
    ('1/20', '(X^4 - 8 X^3 + 19 X^2 - 12 X + 1) (X^2 - 3 X + 1) (X^2 - 5 X + 5) (X - 2)'),
    ('3/20', '-(X^5 - 8 X^4 + 21 X^3 - 20 X^2 + 7 X - 2) (X^4 - 6 X^3 + 11 X^2 - 6 X - 1)'),
    ('7/20', '-(X^5 - 4 X^4 + 7 X^3 - 4 X^2 - X + 2) (X^4 - 2 X^3 + X^2 + 2 X - 1)'),
    ('9/20', '(X^4 + 3 X^2 + 1) (X^3 - X^2 + 3 X - 2) (X^2 - X + 1)'),
]
