"""Gauss-Patterson nodes and weights on [-1, 1], 1 to 255 points.

Only the nonnegative half is stored, ordered from 0 upward; the rule is
symmetric. Generated by tools/gen_patterson.py.
"""

PATTERSON_HALF = {
    1: (
        (
            0.0,
        ),
        (
            2.0,
        ),
    ),
    3: (
        (
            0.0,
            7.745966692414833770358531e-1,
        ),
        (
            0.8888888888888888888888889,
            0.5555555555555555555555556,
        ),
    ),
    7: (
        (
            0.0,
            4.342437493468025580020715e-1,
            7.745966692414833770358531e-1,
            9.604912687080202834235071e-1,
        ),
        (
            0.4509165386584741423451101,
            0.4013974147759622229050518,
            0.2684880898683334407285693,
            0.1046562260264672651938239,
        ),
    ),
    15: (
        (
            0.0,
            2.23386686428966881628204e-1,
            4.342437493468025580020715e-1,
            6.211029467372264029406874e-1,
            7.745966692414833770358531e-1,
            8.884592328722569988904202e-1,
            9.604912687080202834235071e-1,
            9.938319632127550222085128e-1,
        ),
        (
            0.2255104997982066873864225,
            0.2191568584015874964036932,
            0.2006285293769890210339319,
            0.1715119091363913807873532,
            0.1344152552437842203599688,
            0.09292719531512453768589422,
            0.05160328299707973969692012,
            0.01700171962994026033902742,
        ),
    ),
    31: (
        (
            0.0,
            1.124889431331866257458433e-1,
            2.23386686428966881628204e-1,
            3.311353932579768330926408e-1,
            4.342437493468025580020715e-1,
            5.313197436443756239721034e-1,
            6.211029467372264029406874e-1,
            7.024962064915270786098002e-1,
            7.745966692414833770358531e-1,
            8.367259381688687355027538e-1,
            8.884592328722569988904202e-1,
            9.296548574297400566701257e-1,
            9.604912687080202834235071e-1,
            9.815311495537401068673619e-1,
            9.938319632127550222085128e-1,
            9.990981249676675976622261e-1,
        ),
        (
            0.1127552567207686916071499,
            0.1119568730209534568801436,
            0.1095784210559246382366884,
            0.1056698935802348097438159,
            0.1003142786117955787712936,
            0.09362710998126447361665878,
            0.08575592004999035115418652,
            0.07687962049900353104270519,
            0.06720775429599070354040106,
            0.05697950949412335741219737,
            0.04646289326175798654140464,
            0.03595710330712932209677783,
            0.02580759809617665356464612,
            0.01644604985438781093378839,
            0.00843456573932110624631493,
            0.002544780791561874415402782,
        ),
    ),
    63: (
        (
            0.0,
            5.634431304659278997196786e-2,
            1.124889431331866257458433e-1,
            1.682352515522074649823133e-1,
            2.23386686428966881628204e-1,
            2.777498220218243150653564e-1,
            3.311353932579768330926408e-1,
            3.833593241987303469164852e-1,
            4.342437493468025580020715e-1,
            4.836180269458410275621533e-1,
            5.313197436443756239721034e-1,
            5.77195710052045814843691e-1,
            6.211029467372264029406874e-1,
            6.629096600247805954610153e-1,
            7.024962064915270786098002e-1,
            7.397560443526947586772178e-1,
            7.745966692414833770358531e-1,
            8.06940531950217611856308e-1,
            8.367259381688687355027538e-1,
            8.639079381936904771464159e-1,
            8.884592328722569988904202e-1,
            9.103711569570042924977907e-1,
            9.296548574297400566701257e-1,
            9.463428583734029051484962e-1,
            9.604912687080202834235071e-1,
            9.721828747485817965780588e-1,
            9.815311495537401068673619e-1,
            9.886847575474294799385289e-1,
            9.938319632127550222085128e-1,
            9.972062593722219590764525e-1,
            9.990981249676675976622261e-1,
            9.998728881203576119379568e-1,
        ),
        (
            0.05637762836038471738766256,
            0.05627769983125430127259535,
            0.05597843651047631940755338,
            0.05548140435655936398783841,
            0.05478921052796286503221753,
            0.05390549933526606392687695,
            0.05283494679011651986207666,
            0.0515832539520484587768091,
            0.05015713930589953741367955,
            0.04856433040667319871594712,
            0.04681355499062801240264808,
            0.04491453165363219741425425,
            0.0428779600250077344929123,
            0.0407155101169443189338941,
            0.03843981024945553203864035,
            0.03606443278078257264010716,
            0.03360387714820773054173399,
            0.03107355111168796487988439,
            0.02848975474583354861250609,
            0.02586967932721474691075827,
            0.02323144663991026944325649,
            0.02059423391591271114918856,
            0.01797855156812827033289605,
            0.01540675046655949780213083,
            0.01290380010035126562597665,
            0.01049824690962132189827284,
            0.008223007957235929669257784,
            0.006115506822117246339678284,
            0.004217630441558854839084227,
            0.002579049794685688272427796,
            0.001265156556230068011372609,
            0.0003632214818455306596935806,
        ),
    ),
    127: (
        (
            0.0,
            2.818464894974569433939733e-2,
            5.634431304659278997196786e-2,
            8.445404008371088371018217e-2,
            1.124889431331866257458433e-1,
            1.404242331525601745938196e-1,
            1.682352515522074649823133e-1,
            1.958975027111001539154602e-1,
            2.23386686428966881628204e-1,
            2.506787303034831766129571e-1,
            2.777498220218243150653564e-1,
            3.04576441556714043335324e-1,
            3.311353932579768330926408e-1,
            3.574038378315321523762149e-1,
            3.833593241987303469164852e-1,
            4.089798212298886724090317e-1,
            4.342437493468025580020715e-1,
            4.59130011989832332873502e-1,
            4.836180269458410275621533e-1,
            5.076877575337166021547831e-1,
            5.313197436443756239721034e-1,
            5.544951326319325488663814e-1,
            5.77195710052045814843691e-1,
            5.99403930242242892974251e-1,
            6.211029467372264029406874e-1,
            6.422766425097595137741136e-1,
            6.629096600247805954610153e-1,
            6.829874310910792280870776e-1,
            7.024962064915270786098002e-1,
            7.214230853700989154849762e-1,
            7.397560443526947586772178e-1,
            7.574839663805136379262696e-1,
            7.745966692414833770358531e-1,
            7.910849337998483614346381e-1,
            8.06940531950217611856308e-1,
            8.221562543649804073725271e-1,
            8.367259381688687355027538e-1,
            8.506444947683502797578274e-1,
            8.639079381936904771464159e-1,
            8.765134144847052697416266e-1,
            8.884592328722569988904202e-1,
            8.997448997769400366386332e-1,
            9.103711569570042924977907e-1,
            9.203400254700124207298214e-1,
            9.296548574297400566701257e-1,
            9.383203977795928836548223e-1,
            9.463428583734029051484962e-1,
            9.537300064257611364147486e-1,
            9.604912687080202834235071e-1,
            9.666378515584165670922798e-1,
            9.721828747485817965780588e-1,
            9.771415146397057141563958e-1,
            9.815311495537401068673619e-1,
            9.853714995985203711137582e-1,
            9.886847575474294799385289e-1,
            9.914957211781061323985001e-1,
            9.938319632127550222085128e-1,
            9.957241046984071885094395e-1,
            9.972062593722219590764525e-1,
            9.983166353184073925306346e-1,
            9.990981249676675976622261e-1,
            9.995987996719106832519675e-1,
            9.998728881203576119379568e-1,
            9.999824303548915985800121e-1,
        ),
        (
            0.02818881418019235869383128,
            0.02817631903301660213065358,
            0.02813884991562715063629767,
            0.02807645579381724660684785,
            0.02798921825523815970377669,
            0.0278772514766137016085238,
            0.0277407021782796819939192,
            0.02757974956648187303486871,
            0.02739460526398143251610877,
            0.0271855132296247918192086,
            0.02695274966763303196343848,
            0.0266966229274503599061547,
            0.02641747339505825993103833,
            0.02611567337670609768049881,
            0.02579162697602422938840455,
            0.0254457699654647658125744,
            0.02507856965294976870683977,
            0.02469052474448767690906084,
            0.02428216520333659935797356,
            0.02385405210603854008044603,
            0.02340677749531400620132404,
            0.02294096422938774876080053,
            0.02245726582681609870712712,
            0.0219563663053178249392605,
            0.02143898001250386724645616,
            0.02090585144581202385222185,
            0.02035775505847215946694702,
            0.01979549504809749948802772,
            0.01921990512472776601932028,
            0.01863184825613879018631404,
            0.0180322163903912863200531,
            0.01742193015946417374715226,
            0.01680193857410386527086942,
            0.01617321872957771994194796,
            0.01553677555584398243992842,
            0.0148936416648151820348104,
            0.01424487737291677430634157,
            0.01359157100976554678957292,
            0.01293483966360737345473396,
            0.01227583056008277008696633,
            0.01161572331995513472698495,
            0.01095573338783790164803273,
            0.01029711695795635552368646,
            0.009641177729702536695298303,
            0.008989275784064135723280604,
            0.008342838753968157705584124,
            0.007703375233279741848165978,
            0.007072489995433555468046316,
            0.006451900050175736922805098,
            0.005843449875835639507559512,
            0.005249123454808859125133846,
            0.004671050372114321747405433,
            0.004111503978654693047170268,
            0.003572892783517299649384488,
            0.003057753410175531136131384,
            0.002568764943794020373127716,
            0.002108815245726632879332553,
            0.00168114286542146990631373,
            0.001289524082610417392098509,
            0.0009383698485423815007940444,
            0.0006326073193626335442190141,
            0.0003777466463269846602743645,
            0.0001807395644453883578203339,
            0.0000505360952078625176246656,
        ),
    ),
    255: (
        (
            0.0,
            1.409388641078246261418849e-2,
            2.818464894974569433939733e-2,
            4.22691647653636032124049e-2,
            5.634431304659278997196786e-2,
            7.040697604285517906329688e-2,
            8.445404008371088371018217e-2,
            9.848239659811920209027576e-2,
            1.124889431331866257458433e-1,
            1.264705843723019668506635e-1,
            1.404242331525601745938196e-1,
            1.543468114813781086924468e-1,
            1.682352515522074649823133e-1,
            1.820864967592521982463995e-1,
            1.958975027111001539154602e-1,
            2.096652382431811947663427e-1,
            2.23386686428966881628204e-1,
            2.37058845589829727212668e-1,
            2.506787303034831766129571e-1,
            2.642433724109267619449483e-1,
            2.777498220218243150653564e-1,
            2.911951485182466819636911e-1,
            3.04576441556714043335324e-1,
            3.178908120684766831817393e-1,
            3.311353932579768330926408e-1,
            3.443073415994380227766224e-1,
            3.574038378315321523762149e-1,
            3.704220879500782301375374e-1,
            3.833593241987303469164852e-1,
            3.962128060576159391825214e-1,
            4.089798212298886724090317e-1,
            4.216576866261633000563047e-1,
            4.342437493468025580020715e-1,
            4.467353876620284737422223e-1,
            4.59130011989832332873502e-1,
            4.71425065871658876934088e-1,
            4.836180269458410275621533e-1,
            4.957064079187614601701115e-1,
            5.076877575337166021547831e-1,
            5.195596615374570219929141e-1,
            5.313197436443756239721034e-1,
            5.429656664983114904923031e-1,
            5.544951326319325488663814e-1,
            5.659058854236544226229704e-1,
            5.77195710052045814843691e-1,
            5.883624344476625414343674e-1,
            5.99403930242242892974251e-1,
            6.103181137151864001555787e-1,
            6.211029467372264029406874e-1,
            6.317564377111942304135846e-1,
            6.422766425097595137741136e-1,
            6.526616654100174961007709e-1,
            6.629096600247805954610153e-1,
            6.730188302304184791988795e-1,
            6.829874310910792280870776e-1,
            6.928137697791147028946515e-1,
            7.024962064915270786098002e-1,
            7.120331553622520345866791e-1,
            7.214230853700989154849762e-1,
            7.306645212421812613293067e-1,
            7.397560443526947586772178e-1,
            7.486962936169366028228287e-1,
            7.574839663805136379262696e-1,
            7.661178193037600907166741e-1,
            7.745966692414833770358531e-1,
            7.829193941182830163851805e-1,
            7.910849337998483614346381e-1,
            7.990922909608414017998032e-1,
            8.06940531950217611856308e-1,
            8.146287876551374134358166e-1,
            8.221562543649804073725271e-1,
            8.295221946374014001781051e-1,
            8.367259381688687355027538e-1,
            8.437668826727086010383141e-1,
            8.506444947683502797578274e-1,
            8.573583108862321565251266e-1,
            8.639079381936904771464159e-1,
            8.702930555481139058511514e-1,
            8.765134144847052697416266e-1,
            8.825688402473419068416954e-1,
            8.884592328722569988904202e-1,
            8.941845683355590228593522e-1,
            8.997448997769400366386332e-1,
            9.051403588132615951893038e-1,
            9.103711569570042924977907e-1,
            9.154375871557650406439536e-1,
            9.203400254700124207298214e-1,
            9.25078932907075652364133e-1,
            9.296548574297400566701257e-1,
            9.340684361577257879994778e-1,
            9.383203977795928836548223e-1,
            9.4241156519108305981256e-1,
            9.463428583734029051484962e-1,
            9.501152975212948765578423e-1,
            9.537300064257611364147486e-1,
            9.571882161098609627362086e-1,
            9.604912687080202834235071e-1,
            9.63640621569812132520974e-1,
            9.666378515584165670922798e-1,
            9.694846595024592317709081e-1,
            9.721828747485817965780588e-1,
            9.747344597524026677607267e-1,
            9.771415146397057141563958e-1,
            9.794062816708626838061335e-1,
            9.815311495537401068673619e-1,
            9.835186575786327287616646e-1,
            9.853714995985203711137582e-1,
            9.870925279540340671898988e-1,
            9.886847575474294799385289e-1,
            9.901513704007701591805351e-1,
            9.914957211781061323985001e-1,
            9.927213442827886153282022e-1,
            9.938319632127550222085128e-1,
            9.948315028006210005191305e-1,
            9.957241046984071885094395e-1,
            9.965141459148902738486841e-1,
            9.972062593722219590764525e-1,
            9.978053544959572745618333e-1,
            9.983166353184073925306346e-1,
            9.987456144680951147035285e-1,
            9.990981249676675976622261e-1,
            9.993803380250235819280793e-1,
            9.995987996719106832519675e-1,
            9.997604909244320473304479e-1,
            9.998728881203576119379568e-1,
            9.999439962070543757638536e-1,
            9.999824303548915985800121e-1,
            9.999975963797484646202316e-1,
        ),
        (
            0.01409440709009617934691564,
            0.01409284506916040835495927,
            0.01408815951650830106532679,
            0.01408035196255366132484584,
            0.01406942495781357531814884,
            0.01405538207264996427716793,
            0.01403822789690862330342392,
            0.01401796803945660880987222,
            0.01399460912761907985188834,
            0.01396815880651693851572778,
            0.0139386257383068508042619,
            0.01390601960132546126353122,
            0.0138703510891398409969596,
            0.01383163190950642867649597,
            0.01378987478324093651743436,
            0.01374509344300189663225205,
            0.01369730263199071625805438,
            0.01364651810257129142839989,
            0.0135927566148123959096043,
            0.01353603593495621361366531,
            0.01347637483381651598171924,
            0.01341379308511009851296638,
            0.01334831146372517995307735,
            0.01327995174393053065037751,
            0.01320873669752912996551916,
            0.01313469009196015283638133,
            0.0130578366883530488402494,
            0.01297820223953739928584218,
            0.01289581348801211469420228,
            0.0128106981638773619668417,
            0.0127228849827323829062872,
            0.01263240364354207876454054,
            0.01253928482647488435341989,
            0.0124435601907140352631495,
            0.01234526237224383845453042,
            0.01224442498161198589862921,
            0.01214108260166829967898678,
            0.01203527078527956263044987,
            0.01192702605301927004022302,
            0.01181638589083023576322479,
            0.01170338874765700310066202,
            0.01158807403304395256842398,
            0.01147048211469387438040027,
            0.01135065431598059660173448,
            0.01122863291340804935356356,
            0.01110446113400692653699942,
            0.01097818315265891246963025,
            0.01084984408933731409902453,
            0.01071949000625193362322808,
            0.01058716790488519793094282,
            0.01045292572290601192611093,
            0.0103168123309476216819207,
            0.01017887752923607973347351,
            0.01003917204405684079818103,
            0.009897747524048749744013861,
            0.009754656536317411461082935,
            0.00960995256236388300966014,
            0.009463689993830065294272431,
            0.00931592412806939509315702,
            0.009166711163560788406705196,
            0.00901610819519564316002655,
            0.008864173209482494264114295,
            0.008710965079732086873576132,
            0.008556543561307689619172933,
            0.008400969287051932635434709,
            0.008244303763032868030550597,
            0.008086609364788859970973981,
            0.007927949334294849110252542,
            0.007768387777921991219964209,
            0.007607989665719056583217397,
            0.007446820832407591017405198,
            0.007284947980553807063879811,
            0.007122438686458387153170783,
            0.006959361409390422939445075,
            0.006795785504882773394786458,
            0.006631781242901887894122007,
            0.006467419831803686727366978,
            0.006302773449085758717163988,
            0.006137915280041385043483165,
            0.005972919565508165804947299,
            0.005807861659977567363492477,
            0.005642818101384444158454606,
            0.005477866693918950824016363,
            0.005313086605187056566288043,
            0.005148558478978177761843232,
            0.00498436456476553860120001,
            0.004820588864851268347649152,
            0.004657317299756854777277945,
            0.004494637892032067861640302,
            0.0043326409680929828545377,
            0.004171419376984078852792062,
            0.004011068724075023398889936,
            0.003851687616639870924082989,
            0.0036933779170256508182573,
            0.003536244997716777734023158,
            0.00338039799108692038234993,
            0.003225950025087868461402549,
            0.003073018434702578323407838,
            0.002921724937917819753779756,
            0.002772195764593450993995214,
            0.002624561727404429562566924,
            0.002478958226657567930678215,
            0.002335525186057160873702698,
            0.002194406925363838838802918,
            0.002055751989327346523585572,
            0.001919712971013872412522717,
            0.001786446391758649824681033,
            0.001656112728154452605216828,
            0.001528876705087765568381058,
            0.001404907995655144642715211,
            0.001284382471897010176805112,
            0.001167484117429959407693332,
            0.001054407622863316772249567,
            0.0009453615168585253824630152,
            0.0008405714327107224636468446,
            0.0007402828042445033304631602,
            0.0006447620413057247793271973,
            0.0005542953149303747149177321,
            0.0004691849242478504097545665,
            0.0003897452844732822932155639,
            0.0003163036608222644768860015,
            0.0002492124004829972940245377,
            0.0001888732645065049136609306,
            0.0001357549109492287197298429,
            0.00009037273465875114926120483,
            0.00005327529366978061312535244,
            0.00002515787038428066148860299,
            0.000006937936432410826716953823,
        ),
    ),
}
